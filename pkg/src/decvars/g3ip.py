"""Intuitionistic single-succedent calculus G3ip and its structural extension.

``IProof`` trees may contain the admissible rules LW, LC and Cut as
explicit nodes; a proof without them is *pure*.  ``check_i`` validates
either kind.  Small tactic combinators (``rimp``, ``limp``, ...) build
proof trees goal-first: each returns a function from a conclusion
sequent to a proof of it.
"""

from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from .formula import (
    BOT, And, Atom, Formula, Imp, ISequent, Or, Star, is_submultiset,
    multiset_eq, multiset_minus, remove_one, render, render_sequent,
)
from .g3cp import ProofCheckError

# proof transformations recurse along proof depth
sys.setrecursionlimit(max(sys.getrecursionlimit(), 200_000))

__all__ = [
    "IProof", "INT_RULES", "STRUCTURAL_RULES", "check_i", "is_pure",
    "ax", "lbot", "land", "lor", "limp", "rand", "ror1", "ror2", "rimp", "idt", "lw",
    "identity_proof", "weaken", "lw_node", "lc_node", "cut", "cut_shared",
]

INT_RULES = {"Ax": 0, "LBot": 0, "LAnd": 1, "RAnd": 2, "LOr": 2, "ROr1": 1, "ROr2": 1,
             "LImp": 2, "RImp": 1, "LW": 1, "LC": 1, "Cut": 2}
STRUCTURAL_RULES = frozenset({"LW", "LC", "Cut"})


@dataclass(eq=False)
class IProof:
    conclusion: ISequent
    rule: str
    principal: Formula | None = None
    premises: tuple = field(default=())
    cut_formula: Formula | None = None

    @cached_property
    def depth(self) -> int:
        return 1 + max((p.depth for p in self.premises), default=0)

    @cached_property
    def size(self) -> int:
        return 1 + sum(p.size for p in self.premises)

    @cached_property
    def pure(self) -> bool:
        return self.rule not in STRUCTURAL_RULES and all(p.pure for p in self.premises)

    def __str__(self):
        return f"{self.rule}: {render_sequent(self.conclusion)}"


def is_pure(proof: IProof) -> bool:
    return proof.pure


# -- checking ----------------------------------------------------------------

def _check_node(node: IProof) -> None:
    ante, succ = node.conclusion.ante, node.conclusion.succ
    rule, p = node.rule, node.principal
    prem = [q.conclusion for q in node.premises]

    def same(s: ISequent, a: Iterable, c: Formula, which: str):
        if s.succ != c or not multiset_eq(s.ante, a):
            raise ValueError(f"{which} premise {render_sequent(s)} does not match {rule} schema, "
                             f"expected {render_sequent(ISequent(tuple(a), c))}")

    if rule == "Ax":
        if not isinstance(p, (Atom, Star)):
            raise ValueError("Ax requires a propositional variable or * as witness")
        if p not in ante or succ != p:
            raise ValueError(f"Ax witness {render(p)} must be in the antecedent and be the succedent")
        return
    if rule == "LBot":
        if BOT not in ante:
            raise ValueError("LBot requires bot in the antecedent")
        return
    if rule == "LW":
        if prem[0].succ != succ or not is_submultiset(prem[0].ante, ante):
            raise ValueError("LW premise antecedent must be a sub-multiset with the same succedent")
        return
    if rule == "LC":
        if p is None or Counter(ante)[p] < 1:
            raise ValueError("LC principal must occur in the conclusion")
        same(prem[0], ante + (p,), succ, "LC")
        return
    if rule == "Cut":
        a = node.cut_formula
        if a is None:
            raise ValueError("Cut needs a cut formula")
        left, right = prem
        if left.succ != a:
            raise ValueError(f"left Cut premise must conclude {render(a)}")
        if a not in right.ante:
            raise ValueError(f"right Cut premise must have {render(a)} in its antecedent")
        if right.succ != succ or not multiset_eq(ante, left.ante + remove_one(right.ante, a)):
            raise ValueError("Cut conclusion must be the concatenated contexts")
        return
    if p is None:
        raise ValueError(f"{rule} needs a principal formula")
    if rule in ("LAnd", "LOr", "LImp"):
        if p not in ante:
            raise ValueError(f"principal {render(p)} not in antecedent")
        rest = remove_one(ante, p)
        if rule == "LAnd" and isinstance(p, And):
            same(prem[0], (p.left, p.right) + rest, succ, "the")
        elif rule == "LOr" and isinstance(p, Or):
            same(prem[0], (p.left,) + rest, succ, "left")
            same(prem[1], (p.right,) + rest, succ, "right")
        elif rule == "LImp" and isinstance(p, Imp):
            same(prem[0], ante, p.left, "left")
            same(prem[1], (p.right,) + rest, succ, "right")
        else:
            raise ValueError(f"principal {render(p)} does not fit rule {rule}")
        return
    if succ != p:
        raise ValueError(f"principal {render(p)} must be the succedent")
    if rule == "RAnd" and isinstance(p, And):
        same(prem[0], ante, p.left, "left")
        same(prem[1], ante, p.right, "right")
    elif rule == "ROr1" and isinstance(p, Or):
        same(prem[0], ante, p.left, "the")
    elif rule == "ROr2" and isinstance(p, Or):
        same(prem[0], ante, p.right, "the")
    elif rule == "RImp" and isinstance(p, Imp):
        same(prem[0], (p.left,) + ante, p.right, "the")
    else:
        raise ValueError(f"principal {render(p)} does not fit rule {rule}")


def check_i(proof: IProof, allow_structural: bool = False) -> None:
    """Raise ProofCheckError unless every node matches its schema.

    With ``allow_structural`` false any LW, LC or Cut node is rejected.
    """
    stack = [(proof, ())]
    seen = set()
    while stack:
        node, path = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if node.rule not in INT_RULES:
            raise ProofCheckError(path, f"unknown rule {node.rule!r}")
        if node.rule in STRUCTURAL_RULES and not allow_structural:
            raise ProofCheckError(path, f"structural rule present: {node.rule}")
        if len(node.premises) != INT_RULES[node.rule]:
            raise ProofCheckError(path, f"{node.rule} takes {INT_RULES[node.rule]} premises, "
                                        f"got {len(node.premises)}")
        try:
            _check_node(node)
        except ValueError as e:
            raise ProofCheckError(path, str(e)) from None
        for i, sub in enumerate(node.premises):
            stack.append((sub, path + (i,)))


# -- tactics -----------------------------------------------------------------

Tactic = Callable[[ISequent], IProof]


def ax(seq: ISequent) -> IProof:
    return IProof(seq, "Ax", seq.succ)


def lbot(seq: ISequent) -> IProof:
    return IProof(seq, "LBot", BOT)


def idt(seq: ISequent) -> IProof:
    """Close ``A, G => A`` for any formula ``A``."""
    return identity_proof(seq.succ, remove_one(seq.ante, seq.succ))


def rimp(t: Tactic) -> Tactic:
    def build(seq):
        a = seq.succ
        return IProof(seq, "RImp", a, (t(ISequent((a.left,) + seq.ante, a.right)),))
    return build


def rand(t1: Tactic, t2: Tactic) -> Tactic:
    def build(seq):
        a = seq.succ
        return IProof(seq, "RAnd", a, (t1(ISequent(seq.ante, a.left)), t2(ISequent(seq.ante, a.right))))
    return build


def ror1(t: Tactic) -> Tactic:
    return lambda seq: IProof(seq, "ROr1", seq.succ, (t(ISequent(seq.ante, seq.succ.left)),))


def ror2(t: Tactic) -> Tactic:
    return lambda seq: IProof(seq, "ROr2", seq.succ, (t(ISequent(seq.ante, seq.succ.right)),))


def land(p: Formula, t: Tactic) -> Tactic:
    def build(seq):
        rest = remove_one(seq.ante, p)
        return IProof(seq, "LAnd", p, (t(ISequent((p.left, p.right) + rest, seq.succ)),))
    return build


def lor(p: Formula, t1: Tactic, t2: Tactic) -> Tactic:
    def build(seq):
        rest = remove_one(seq.ante, p)
        return IProof(seq, "LOr", p, (t1(ISequent((p.left,) + rest, seq.succ)),
                                      t2(ISequent((p.right,) + rest, seq.succ))))
    return build


def limp(p: Formula, t1: Tactic, t2: Tactic) -> Tactic:
    def build(seq):
        rest = remove_one(seq.ante, p)
        return IProof(seq, "LImp", p, (t1(ISequent(seq.ante, p.left)),
                                       t2(ISequent((p.right,) + rest, seq.succ))))
    return build


def lw(drop: Iterable[Formula], t: Tactic) -> Tactic:
    """LW node: prove the goal without the formulas in ``drop``."""
    drop = tuple(drop)

    def build(seq):
        return IProof(seq, "LW", None, (t(ISequent(multiset_minus(seq.ante, drop), seq.succ)),))
    return build


# -- derived constructions ---------------------------------------------------

def identity_proof(a: Formula, context: Iterable[Formula] = ()) -> IProof:
    """Pure proof of ``a, context => a`` by expansion on ``a``."""
    seq = ISequent((a,) + tuple(context), a)
    if isinstance(a, (Atom, Star)):
        return ax(seq)
    if a == BOT:
        return lbot(seq)
    if isinstance(a, And):
        return land(a, rand(idt, idt))(seq)
    if isinstance(a, Or):
        return lor(a, ror1(idt), ror2(idt))(seq)
    return rimp(limp(a, idt, idt))(seq)


def weaken(proof: IProof, extra: Iterable[Formula]) -> IProof:
    """Add ``extra`` to every antecedent; depth is unchanged."""
    extra = tuple(extra)
    if not extra:
        return proof
    memo: dict[int, IProof] = {}

    def go(node: IProof) -> IProof:
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        c = node.conclusion
        seq = ISequent(c.ante + extra, c.succ)
        if node.rule == "LW":
            out = IProof(seq, "LW", None, node.premises)
        elif node.rule == "Cut":
            left, right = node.premises
            out = IProof(seq, "Cut", None, (left, go(right)), node.cut_formula)
        else:
            out = IProof(seq, node.rule, node.principal, tuple(go(q) for q in node.premises),
                         node.cut_formula)
        memo[id(node)] = out
        return out

    return go(proof)


def lw_node(proof: IProof, extra: Iterable[Formula]) -> IProof:
    """Record weakening as an explicit LW node."""
    extra = tuple(extra)
    if not extra:
        return proof
    c = proof.conclusion
    return IProof(ISequent(c.ante + extra, c.succ), "LW", None, (proof,))


def lc_node(proof: IProof, dup: Formula) -> IProof:
    c = proof.conclusion
    if Counter(c.ante)[dup] < 2:
        raise ValueError(f"LC needs two copies of {render(dup)}")
    return IProof(ISequent(remove_one(c.ante, dup), c.succ), "LC", dup, (proof,))


def cut(left: IProof, right: IProof, a: Formula) -> IProof:
    """Cut node concluding ``G, G' => C`` from ``G => a`` and ``a, G' => C``."""
    if left.conclusion.succ != a:
        raise ValueError(f"cut formula mismatch: left premise concludes "
                         f"{render(left.conclusion.succ)}, not {render(a)}")
    if a not in right.conclusion.ante:
        raise ValueError(f"cut formula mismatch: {render(a)} not in right antecedent")
    ante = left.conclusion.ante + remove_one(right.conclusion.ante, a)
    return IProof(ISequent(ante, right.conclusion.succ), "Cut", None, (left, right), a)


def cut_shared(left: IProof, right: IProof, a: Formula) -> IProof:
    """Cut ``G => a`` against ``a, G => C`` and contract the doubled ``G`` back to ``G => C``."""
    shared = left.conclusion.ante
    if not multiset_eq(remove_one(right.conclusion.ante, a), shared):
        raise ValueError("cut_shared: premises must share their context")
    proof = cut(left, right, a)
    for f in shared:
        proof = lc_node(proof, f)
    return proof
