"""Classical multi-succedent sequent calculus G3cp.

Proof trees, a schema checker, a backtracking-free backward search (every
rule is invertible) and a truth-table oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .formula import (
    BOT, And, Atom, Bot, Formula, Imp, Or, Sequent, Star, atoms, contains_star,
    multiset_eq, remove_one, render, render_sequent,
)

__all__ = [
    "CProof", "ProofCheckError", "CLASSICAL_RULES", "check_c", "search_c",
    "Countermodel", "taut_oracle", "evaluate",
]

CLASSICAL_RULES = {"Ax": 0, "LBot": 0, "LAnd": 1, "RAnd": 2, "LOr": 2, "ROr": 1, "LImp": 2, "RImp": 1}


class ProofCheckError(ValueError):
    """A proof node does not instantiate its rule schema.

    ``path`` lists premise indices from the root to the offending node.
    """

    def __init__(self, path: tuple, message: str):
        where = "root" if not path else "root" + "".join(f".{i}" for i in path)
        super().__init__(f"{where}: {message}")
        self.path = path
        self.reason = message


@dataclass(frozen=True, eq=False)
class CProof:
    conclusion: Sequent
    rule: str
    principal: Formula | None = None
    premises: tuple = field(default=())

    @cached_property
    def depth(self) -> int:
        return 1 + max((p.depth for p in self.premises), default=0)

    @cached_property
    def size(self) -> int:
        return 1 + sum(p.size for p in self.premises)

    def __str__(self):
        return f"{self.rule}: {render_sequent(self.conclusion)}"


def _is_letter(f: Formula) -> bool:
    return isinstance(f, (Atom, Star))


def _expected_premises(node: CProof) -> list[Sequent]:
    """Premise sequents dictated by the rule schema, or raise ValueError."""
    ante, succ = node.conclusion.ante, node.conclusion.succ
    rule, p = node.rule, node.principal
    if rule == "Ax":
        if p is None or not _is_letter(p):
            raise ValueError("Ax requires a propositional variable as witness")
        if p not in ante or p not in succ:
            raise ValueError(f"Ax witness {render(p)} must occur on both sides")
        return []
    if rule == "LBot":
        if BOT not in ante:
            raise ValueError("LBot requires bot in the antecedent")
        return []
    if p is None:
        raise ValueError(f"{rule} needs a principal formula")
    if rule.startswith("L"):
        if p not in ante:
            raise ValueError(f"principal {render(p)} not in antecedent")
        rest = remove_one(ante, p)
    else:
        if p not in succ:
            raise ValueError(f"principal {render(p)} not in succedent")
        rest = remove_one(succ, p)
    if rule == "LAnd" and isinstance(p, And):
        return [Sequent((p.left, p.right) + rest, succ)]
    if rule == "LOr" and isinstance(p, Or):
        return [Sequent((p.left,) + rest, succ), Sequent((p.right,) + rest, succ)]
    if rule == "LImp" and isinstance(p, Imp):
        return [Sequent(rest, succ + (p.left,)), Sequent((p.right,) + rest, succ)]
    if rule == "RAnd" and isinstance(p, And):
        return [Sequent(ante, rest + (p.left,)), Sequent(ante, rest + (p.right,))]
    if rule == "ROr" and isinstance(p, Or):
        return [Sequent(ante, rest + (p.left, p.right))]
    if rule == "RImp" and isinstance(p, Imp):
        return [Sequent((p.left,) + ante, rest + (p.right,))]
    raise ValueError(f"principal {render(p)} does not fit rule {rule}")


def check_c(proof: CProof) -> None:
    """Raise ProofCheckError unless every node instantiates its G3cp rule."""
    stack = [(proof, ())]
    while stack:
        node, path = stack.pop()
        if node.rule not in CLASSICAL_RULES:
            raise ProofCheckError(path, f"unknown rule {node.rule!r}")
        if len(node.premises) != CLASSICAL_RULES[node.rule]:
            raise ProofCheckError(path, f"{node.rule} takes {CLASSICAL_RULES[node.rule]} premises, "
                                        f"got {len(node.premises)}")
        try:
            expected = _expected_premises(node)
        except ValueError as e:
            raise ProofCheckError(path, str(e)) from None
        for i, (want, sub) in enumerate(zip(expected, node.premises)):
            got = sub.conclusion
            if not (multiset_eq(got.ante, want.ante) and multiset_eq(got.succ, want.succ)):
                raise ProofCheckError(path + (i,), f"premise {render_sequent(got)} does not match "
                                                   f"{node.rule} schema, expected {render_sequent(want)}")
            stack.append((sub, path + (i,)))


# -- decision procedure ------------------------------------------------------

@dataclass(frozen=True)
class Countermodel:
    """A valuation making every antecedent true and every succedent false."""

    valuation: dict

    def __bool__(self):
        return False


class _Refuted(Exception):
    def __init__(self, valuation):
        self.valuation = valuation


def _compound(f: Formula) -> bool:
    return isinstance(f, (And, Or, Imp))


def search_c(seq: Sequent) -> CProof | Countermodel:
    """Backward proof search: decompose the leftmost compound formula,
    antecedent before succedent.  Branches close as soon as an axiom applies."""
    if any(contains_star(f) for f in seq.ante + seq.succ):
        raise ValueError("search_c expects a sequent without '*'")
    names = atoms(seq.ante) | atoms(seq.succ)

    def go(ante: tuple, succ: tuple) -> CProof:
        conclusion = Sequent(ante, succ)
        if BOT in ante:
            return CProof(conclusion, "LBot", BOT)
        for f in ante:
            if isinstance(f, Atom) and f in succ:
                return CProof(conclusion, "Ax", f)
        for i, f in enumerate(ante):
            if _compound(f):
                before, after = ante[:i], ante[i + 1:]
                if isinstance(f, And):
                    prems = [(before + (f.left, f.right) + after, succ)]
                    rule = "LAnd"
                elif isinstance(f, Or):
                    prems = [(before + (f.left,) + after, succ), (before + (f.right,) + after, succ)]
                    rule = "LOr"
                else:
                    prems = [(before + after, succ + (f.left,)), (before + (f.right,) + after, succ)]
                    rule = "LImp"
                return _step(conclusion, rule, f, prems)
        for i, f in enumerate(succ):
            if _compound(f):
                before, after = succ[:i], succ[i + 1:]
                if isinstance(f, And):
                    prems = [(ante, before + (f.left,) + after), (ante, before + (f.right,) + after)]
                    rule = "RAnd"
                elif isinstance(f, Or):
                    prems = [(ante, before + (f.left, f.right) + after)]
                    rule = "ROr"
                else:
                    prems = [((f.left,) + ante, before + (f.right,) + after)]
                    rule = "RImp"
                return _step(conclusion, rule, f, prems)
        true_atoms = {f.name for f in ante if isinstance(f, Atom)}
        raise _Refuted({n: n in true_atoms for n in sorted(names)})

    def _step(conclusion, rule, principal, prems):
        w = conclusion.weight
        subs = []
        for a, s in prems:
            assert Sequent(a, s).weight < w, "search_c: weight must decrease"
            subs.append(go(a, s))
        return CProof(conclusion, rule, principal, tuple(subs))

    try:
        return go(seq.ante, seq.succ)
    except _Refuted as r:
        return Countermodel(r.valuation)


# -- semantic oracle ---------------------------------------------------------

def evaluate(f: Formula, valuation: dict) -> bool:
    """Classical truth value; ``*`` is looked up under the key ``'*'``."""
    if isinstance(f, Atom):
        return valuation[f.name]
    if isinstance(f, Star):
        return valuation["*"]
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return evaluate(f.left, valuation) and evaluate(f.right, valuation)
    if isinstance(f, Or):
        return evaluate(f.left, valuation) or evaluate(f.right, valuation)
    return (not evaluate(f.left, valuation)) or evaluate(f.right, valuation)


def taut_oracle(seq: Sequent) -> bool:
    """Truth-table validity: every valuation satisfying the antecedent satisfies some succedent."""
    formulas = seq.ante + seq.succ
    names = sorted(atoms(formulas))
    if any(contains_star(f) for f in formulas):
        names.append("*")
    for values in itertools.product((False, True), repeat=len(names)):
        v = dict(zip(names, values))
        if all(evaluate(f, v) for f in seq.ante) and not any(evaluate(f, v) for f in seq.succ):
            return False
    return True
