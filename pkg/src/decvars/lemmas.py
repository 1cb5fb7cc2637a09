"""Proof builders for the placeholder toolkit and the double-negation schemas.

Write ``N X`` for ``X -> *`` and ``~X`` for ``X -> bot``.  The nine schemas
built by ``build_lemma`` are

1. ``G, p | ~p, N~p, Np => *``
2. ``G, N~bot => *``
3. ``N~(D & D') => N~D & N~D'``
4. ``NNS & NNS' => NN(S & S')``
5. ``N~(D | D') => NN(N~D | N~D')``
6. ``N(NS & NS') => NN(S | S')``
7. ``N~(S -> B) => NNS -> N~B``
8. ``S -> B => NNS -> NNB``
9. ``N~A -> NNS => NN(A -> S)``

Each is a fixed template; none needs a structural rule.
"""

from __future__ import annotations

from .formula import BOT, STAR, And, Atom, Formula, ISequent, Imp, Or, Star, neg, neg_star, remove_one, subst_star
from .g3ip import (
    IProof, ax, cut, identity_proof, idt, land, lbot, limp, lor, lw_node, rand, rimp, ror1, ror2,
)

__all__ = [
    "nn", "nstar2", "star_refute", "curry_star", "uncurry_star", "dne_star",
    "build_lemma", "lemma_schema", "subst_star_proof", "LEMMA_ARITY",
]


def nn(x: Formula) -> Formula:
    """``(x -> bot) -> *``"""
    return neg_star(neg(x))


def nstar2(x: Formula) -> Formula:
    """``(x -> *) -> *``"""
    return neg_star(neg_star(x))


# -- placeholder toolkit -----------------------------------------------------

def star_refute(proof: IProof) -> IProof:
    """``G => A`` gives ``G, A -> * => *``."""
    c = proof.conclusion
    hyp = neg_star(c.succ)
    seq = ISequent(c.ante + (hyp,), STAR)
    return IProof(seq, "LImp", hyp, (lw_node(proof, (hyp,)), ax(ISequent((STAR,) + c.ante, STAR))))


def curry_star(proof: IProof, a: Formula) -> IProof:
    """``G, A => *`` gives ``G => A -> *`` (one RImp)."""
    c = proof.conclusion
    if c.succ != STAR or a not in c.ante:
        raise ValueError("curry_star expects a proof of 'G, A => *' with A in the antecedent")
    return IProof(ISequent(remove_one(c.ante, a), neg_star(a)), "RImp", neg_star(a), (proof,))


def uncurry_star(proof: IProof) -> IProof:
    """``G => A -> *`` gives ``G, A => *`` by a cut against ``A -> *, A => *``."""
    c = proof.conclusion
    if not (isinstance(c.succ, Imp) and c.succ.right == STAR):
        raise ValueError("uncurry_star expects a proof of 'G => A -> *'")
    a = c.succ.left
    apply = limp(c.succ, idt, ax)(ISequent((c.succ, a), STAR))
    return cut(proof, apply, c.succ)


def dne_star(proof: IProof, a: Formula) -> IProof:
    """``G, A => *`` gives ``G, (A -> *) -> * => *``."""
    return star_refute(curry_star(proof, a))


# -- the nine schemas --------------------------------------------------------

LEMMA_ARITY = {1: ("p",), 2: (), 3: ("D", "D'"), 4: ("S", "S'"), 5: ("D", "D'"),
               6: ("S", "S'"), 7: ("S", "B"), 8: ("S", "B"), 9: ("A", "S")}


def lemma_schema(index: int, *params: Formula, context: tuple = ()) -> ISequent:
    """The instantiated sequent of schema ``index``."""
    ns = neg_star
    if index == 1:
        (p,) = params
        return ISequent(tuple(context) + (Or(p, neg(p)), nn(p), ns(p)), STAR)
    if index == 2:
        return ISequent(tuple(context) + (nn(BOT),), STAR)
    x, y = params
    if index == 3:
        return ISequent((nn(And(x, y)),), And(nn(x), nn(y)))
    if index == 4:
        return ISequent((And(nstar2(x), nstar2(y)),), nstar2(And(x, y)))
    if index == 5:
        return ISequent((nn(Or(x, y)),), nstar2(Or(nn(x), nn(y))))
    if index == 6:
        return ISequent((ns(And(ns(x), ns(y))),), nstar2(Or(x, y)))
    if index == 7:
        return ISequent((nn(Imp(x, y)),), Imp(nstar2(x), nn(y)))
    if index == 8:
        return ISequent((Imp(x, y),), Imp(nstar2(x), nstar2(y)))
    if index == 9:
        return ISequent((Imp(nn(x), nstar2(y)),), nstar2(Imp(x, y)))
    raise ValueError(f"no lemma {index}")


def build_lemma(index: int, *params: Formula, context: tuple = ()) -> IProof:
    """Proof of schema ``index`` instantiated with ``params``.

    ``context`` is the side multiset ``G`` of schemas 1 and 2 and is ignored
    by the others, which callers extend through cut.
    """
    if index not in LEMMA_ARITY:
        raise ValueError(f"no lemma {index}")
    if len(params) != len(LEMMA_ARITY[index]):
        raise ValueError(f"lemma {index} takes parameters {LEMMA_ARITY[index]}")
    seq = lemma_schema(index, *params, context=context)
    ns = neg_star

    if index == 1:
        (p,) = params
        if not isinstance(p, (Atom, Star)):
            raise ValueError("lemma 1 is stated for a propositional variable")
        tactic = lor(Or(p, neg(p)),
                     limp(ns(p), ax, ax),
                     limp(nn(p), idt, ax))
    elif index == 2:
        tactic = limp(nn(BOT), rimp(lbot), ax)
    elif index == 3:
        d, d2 = params
        hyp = nn(And(d, d2))

        def part(x):
            return rimp(limp(hyp, rimp(land(And(d, d2), limp(neg(x), idt, lbot))), ax))

        tactic = rand(part(d), part(d2))
    elif index == 4:
        s, s2 = params
        both = And(nstar2(s), nstar2(s2))
        tactic = land(both, rimp(
            limp(nstar2(s), rimp(
                limp(nstar2(s2), rimp(
                    limp(ns(And(s, s2)), rand(idt, idt), ax)),
                    ax)),
                 ax)))
    elif index == 5:
        d, d2 = params
        e = Or(nn(d), nn(d2))
        hyp = nn(Or(d, d2))
        close = rimp(lor(Or(d, d2), limp(neg(d), idt, lbot), limp(neg(d2), idt, lbot)))
        tactic = rimp(
            limp(ns(e), ror1(rimp(
                limp(ns(e), ror2(rimp(
                    limp(hyp, close, ax))),
                     ax))),
                 ax))
    elif index == 6:
        s, s2 = params
        goal = ns(Or(s, s2))
        tactic = rimp(limp(ns(And(ns(s), ns(s2))),
                           rand(rimp(limp(goal, ror1(idt), ax)),
                                rimp(limp(goal, ror2(idt), ax))),
                           ax))
    elif index == 7:
        s, b = params
        tactic = rimp(rimp(
            limp(nstar2(s), rimp(
                limp(nn(Imp(s, b)), rimp(
                    limp(neg(b), limp(Imp(s, b), idt, idt), lbot)),
                     ax)),
                 ax)))
    elif index == 8:
        s, b = params
        tactic = rimp(rimp(
            limp(nstar2(s), rimp(
                limp(ns(b), limp(Imp(s, b), idt, idt), ax)),
                 ax)))
    elif index == 9:
        a, s = params
        x = Imp(nn(a), nstar2(s))
        goal = ns(Imp(a, s))
        tactic = rimp(
            limp(x,
                 rimp(limp(goal, rimp(limp(neg(a), idt, lbot)), ax)),
                 limp(nstar2(s), rimp(limp(goal, rimp(idt), ax)), ax)))
    else:
        raise ValueError(f"no lemma {index}")
    return tactic(seq)


# -- substitution for the placeholder ----------------------------------------

def subst_star_proof(proof: IProof, c: Formula) -> IProof:
    """Proof of the conclusion with every ``*`` replaced by ``c``.

    Rules map one-for-one; an axiom on ``*`` becomes the identity proof of
    ``c`` when ``c`` is compound.
    """
    memo: dict[int, IProof] = {}
    cache: dict[Formula, Formula] = {}

    def sub(f):
        if f is None:
            return None
        out = cache.get(f)
        if out is None:
            out = cache[f] = subst_star(f, c)
        return out

    def go(node: IProof) -> IProof:
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        concl = node.conclusion
        seq = ISequent(tuple(map(sub, concl.ante)), sub(concl.succ))
        if node.rule == "Ax" and isinstance(node.principal, Star):
            if isinstance(c, (Atom, Star)):
                out = IProof(seq, "Ax", c)
            elif c == BOT:
                out = IProof(seq, "LBot", BOT)
            else:
                out = identity_proof(c, remove_one(seq.ante, c))
                out = IProof(seq, out.rule, out.principal, out.premises)
        else:
            out = IProof(seq, node.rule, sub(node.principal), tuple(go(q) for q in node.premises),
                         sub(node.cut_formula))
        memo[id(node)] = out
        return out

    return go(proof)
