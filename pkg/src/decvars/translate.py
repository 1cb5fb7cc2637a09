"""Classical G3cp proofs to intuitionistic G3ip proofs with excluded middle.

``translate_prop`` walks a classical proof of ``G, D => S`` whose
antecedent is split into a gamma part and a delta part and produces an
extended G3ip proof of

    Pi_V, G, N~D, NS => *

(``N X`` is ``X -> *``).  ``translate_theorem`` specialises the placeholder
to obtain ``Pi_V, G => A`` from a classical proof of ``G => A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .formula import (
    BOT, STAR, And, Formula, Imp, ISequent, Or, Sequent, multiset_eq, neg_star,
    remove_one, render_sequent,
)
from .g3cp import CProof, Countermodel, check_c, search_c
from .g3ip import IProof, ax, cut, identity_proof, lbot, lw_node
from .lemmas import build_lemma, curry_star, dne_star, nn, nstar2, subst_star_proof, uncurry_star
from .polarity import em_set, em_set_general, pi
from .structural import eliminate_structural

__all__ = ["GAMMA", "DELTA", "TranslationError", "TranslationResult", "translate_prop",
           "translate_theorem", "corollary_check", "NotApplicable", "prop_context"]

GAMMA = "gamma"
DELTA = "delta"


class TranslationError(ValueError):
    pass


@dataclass(frozen=True)
class TranslationResult:
    V: frozenset
    proof: IProof
    pure_proof: IProof


def prop_context(V: Iterable[str], gamma: Sequence[Formula], delta: Sequence[Formula],
                 sigma: Sequence[Formula]) -> tuple:
    """The antecedent ``Pi_V, gamma, N~delta, N sigma``."""
    return pi(V) + tuple(gamma) + tuple(nn(d) for d in delta) + tuple(neg_star(s) for s in sigma)


def translate_prop(cp: CProof, tags: Sequence[str], V: Iterable[str], *, checked: bool = False) -> IProof:
    """Extended proof of ``Pi_V, gamma, N~delta, N sigma => *``.

    ``tags`` labels each antecedent occurrence of the end-sequent
    ``GAMMA`` or ``DELTA``; the succedent is the sigma part.
    """
    V = frozenset(V)
    if not checked:
        check_c(cp)
    ante = cp.conclusion.ante
    if len(tags) != len(ante) or any(t not in (GAMMA, DELTA) for t in tags):
        raise TranslationError("one gamma/delta tag is needed per antecedent formula")
    gamma = tuple(f for f, t in zip(ante, tags) if t == GAMMA)
    delta = tuple(f for f, t in zip(ante, tags) if t == DELTA)
    pi_v = pi(V)
    return _Translator(V, pi_v).run(cp, gamma, delta, cp.conclusion.succ)


class _Translator:
    def __init__(self, V: frozenset, pi_v: tuple):
        self.V = V
        self.pi_v = pi_v

    def ctx(self, gamma, delta, sigma) -> tuple:
        return self.pi_v + tuple(gamma) + tuple(nn(d) for d in delta) + tuple(neg_star(s) for s in sigma)

    def run(self, cp: CProof, gamma: tuple, delta: tuple, sigma: tuple) -> IProof:
        concl = cp.conclusion
        if not (multiset_eq(gamma + delta, concl.ante) and multiset_eq(sigma, concl.succ)):
            raise TranslationError(f"partition does not match {render_sequent(concl)}")
        needed = em_set_general(gamma, delta, sigma)
        if not needed <= self.V:
            raise TranslationError(f"V is missing {sorted(needed - self.V)} at {render_sequent(concl)}")
        goal = ISequent(self.ctx(gamma, delta, sigma), STAR)
        rule, p = cp.rule, cp.principal

        if rule == "Ax":
            if p in gamma:
                return IProof(goal, "LImp", neg_star(p),
                              (ax(ISequent(goal.ante, p)),
                               ax(ISequent((STAR,) + remove_one(goal.ante, neg_star(p)), STAR))))
            rest = goal.ante
            for f in (Or(p, Imp(p, BOT)), nn(p), neg_star(p)):
                rest = remove_one(rest, f)
            return build_lemma(1, p, context=rest)
        if rule == "LBot":
            if BOT in gamma:
                return lbot(goal)
            return build_lemma(2, context=remove_one(goal.ante, nn(BOT)))

        if rule in ("LAnd", "LOr", "LImp"):
            if p in gamma:
                return self.left_gamma(cp, gamma, delta, sigma, goal)
            return self.left_delta(cp, gamma, delta, sigma, goal)
        return self.right(cp, gamma, delta, sigma, goal)

    # principal formula in the delta part
    def left_delta(self, cp, gamma, delta, sigma, goal) -> IProof:
        p = cp.principal
        rest_d = remove_one(delta, p)
        rest = self.ctx(gamma, rest_d, sigma)
        if cp.rule == "LAnd":
            d, d2 = p.left, p.right
            sub = self.run(cp.premises[0], gamma, rest_d + (d, d2), sigma)
            packed = And(nn(d), nn(d2))
            conj = IProof(ISequent(rest + (packed,), STAR), "LAnd", packed, (sub,))
            return cut(build_lemma(3, d, d2), conj, packed)
        if cp.rule == "LOr":
            d, d2 = p.left, p.right
            sub1 = self.run(cp.premises[0], gamma, rest_d + (d,), sigma)
            sub2 = self.run(cp.premises[1], gamma, rest_d + (d2,), sigma)
            e = Or(nn(d), nn(d2))
            disj = IProof(ISequent(rest + (e,), STAR), "LOr", e, (sub1, sub2))
            return cut(build_lemma(5, d, d2), dne_star(disj, e), nstar2(e))
        s, b = p.left, p.right
        sub1 = self.run(cp.premises[0], gamma, rest_d, sigma + (s,))
        sub2 = self.run(cp.premises[1], gamma, rest_d + (b,), sigma)
        x = Imp(nstar2(s), nn(b))
        left = lw_node(curry_star(sub1, neg_star(s)), (x,))
        step = IProof(ISequent(rest + (x,), STAR), "LImp", x, (left, sub2))
        return cut(build_lemma(7, s, b), step, x)

    # principal formula in the gamma part
    def left_gamma(self, cp, gamma, delta, sigma, goal) -> IProof:
        p = cp.principal
        rest_g = remove_one(gamma, p)
        if cp.rule == "LAnd":
            sub = self.run(cp.premises[0], rest_g + (p.left, p.right), delta, sigma)
            return IProof(goal, "LAnd", p, (sub,))
        if cp.rule == "LOr":
            sub1 = self.run(cp.premises[0], rest_g + (p.left,), delta, sigma)
            sub2 = self.run(cp.premises[1], rest_g + (p.right,), delta, sigma)
            return IProof(goal, "LOr", p, (sub1, sub2))
        s, b = p.left, p.right
        rest = self.ctx(rest_g, delta, sigma)
        sub1 = self.run(cp.premises[0], rest_g, delta, sigma + (s,))
        sub2 = self.run(cp.premises[1], rest_g + (b,), delta, sigma)
        y = Imp(nstar2(s), nstar2(b))
        left = lw_node(curry_star(sub1, neg_star(s)), (y,))
        step = IProof(ISequent(rest + (y,), STAR), "LImp", y, (left, dne_star(sub2, b)))
        return cut(build_lemma(8, s, b), step, y)

    # principal formula in the succedent
    def right(self, cp, gamma, delta, sigma, goal) -> IProof:
        p = cp.principal
        rest_s = remove_one(sigma, p)
        if cp.rule == "RAnd":
            s, s2 = p.left, p.right
            c1 = curry_star(self.run(cp.premises[0], gamma, delta, rest_s + (s,)), neg_star(s))
            c2 = curry_star(self.run(cp.premises[1], gamma, delta, rest_s + (s2,)), neg_star(s2))
            both = And(nstar2(s), nstar2(s2))
            conj = IProof(ISequent(c1.conclusion.ante, both), "RAnd", both, (c1, c2))
            return uncurry_star(cut(conj, build_lemma(4, s, s2), both))
        if cp.rule == "ROr":
            s, s2 = p.left, p.right
            sub = self.run(cp.premises[0], gamma, delta, rest_s + (s, s2))
            packed = And(neg_star(s), neg_star(s2))
            conj = IProof(ISequent(self.ctx(gamma, delta, rest_s) + (packed,), STAR), "LAnd", packed, (sub,))
            return uncurry_star(cut(curry_star(conj, packed), build_lemma(6, s, s2), neg_star(packed)))
        if cp.rule == "RImp":
            a, s = p.left, p.right
            sub = self.run(cp.premises[0], gamma, delta + (a,), rest_s + (s,))
            curried = curry_star(sub, neg_star(s))
            x = Imp(nn(a), nstar2(s))
            lam = IProof(ISequent(self.ctx(gamma, delta, rest_s), x), "RImp", x, (curried,))
            return uncurry_star(cut(lam, build_lemma(9, a, s), x))
        raise TranslationError(f"unexpected rule {cp.rule}")


def translate_theorem(cp: CProof, *, eliminate: bool = True) -> TranslationResult:
    """Intuitionistic proof of ``Pi_V, G => A`` from a classical proof of ``G => A``."""
    check_c(cp)
    concl = cp.conclusion
    if len(concl.succ) != 1:
        raise TranslationError("translate_theorem needs exactly one succedent formula")
    gamma, (a,) = concl.ante, concl.succ
    V = em_set(gamma, a)
    prop = translate_prop(cp, [GAMMA] * len(gamma), V, checked=True)
    specialised = subst_star_proof(prop, a)
    self_imp = Imp(a, a)
    refl = IProof(ISequent((), self_imp), "RImp", self_imp, (identity_proof(a),))
    extended = cut(refl, specialised, self_imp)
    pure = eliminate_structural(extended) if eliminate else None
    return TranslationResult(V, extended, pure)


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __bool__(self):
        return False


def corollary_check(gamma: Sequence[Formula], a: Formula) -> IProof | NotApplicable:
    """Pure proof of ``gamma => a`` when it is classically valid and needs no excluded middle."""
    found = search_c(Sequent(tuple(gamma), (a,)))
    if isinstance(found, Countermodel):
        return NotApplicable("not classically valid")
    if em_set(gamma, a):
        return NotApplicable("V nonempty")
    return translate_theorem(found).pure_proof
