"""Intuitionistic derivability.

``decide_i`` uses the terminating contraction-free calculus (implication
on the left split by the shape of its antecedent) and shares no rules
with the G3ip checker.  ``search_i`` is a separate G3ip backward search
with loop checking that returns an actual pure proof.
"""

from __future__ import annotations

from functools import lru_cache

from .formula import BOT, And, Atom, Bot, Formula, Imp, ISequent, Or, Star, multiset_minus
from .g3ip import IProof, weaken

__all__ = ["decide_i", "search_i"]


def decide_i(seq: ISequent) -> bool:
    return _g4(frozenset(seq.ante), seq.succ)


def _letter(f: Formula) -> bool:
    return isinstance(f, (Atom, Star))


@lru_cache(maxsize=200_000)
def _g4(ctx: frozenset, goal: Formula) -> bool:
    if BOT in ctx or (_letter(goal) and goal in ctx):
        return True
    # invertible steps first
    for f in ctx:
        rest = ctx - {f}
        if isinstance(f, And):
            return _g4(rest | {f.left, f.right}, goal)
        if isinstance(f, Or):
            return _g4(rest | {f.left}, goal) and _g4(rest | {f.right}, goal)
        if isinstance(f, Imp):
            a = f.left
            if isinstance(a, Bot):
                return _g4(rest, goal)
            if _letter(a) and a in ctx:
                return _g4(rest | {f.right}, goal)
            if isinstance(a, And):
                return _g4(rest | {Imp(a.left, Imp(a.right, f.right))}, goal)
            if isinstance(a, Or):
                return _g4(rest | {Imp(a.left, f.right), Imp(a.right, f.right)}, goal)
    if isinstance(goal, Imp):
        return _g4(ctx | {goal.left}, goal.right)
    if isinstance(goal, And):
        return _g4(ctx, goal.left) and _g4(ctx, goal.right)
    if isinstance(goal, Or) and (_g4(ctx, goal.left) or _g4(ctx, goal.right)):
        return True
    # remaining left implications have an implication or an absent letter as antecedent
    for f in ctx:
        if isinstance(f, Imp) and isinstance(f.left, Imp):
            c, d, b = f.left.left, f.left.right, f.right
            rest = ctx - {f}
            if _g4(rest | {Imp(d, b)}, Imp(c, d)) and _g4(rest | {b}, goal):
                return True
    return False


# -- G3ip search with witnesses ----------------------------------------------

def search_i(seq: ISequent, max_nodes: int = 200_000) -> IProof | None:
    """A pure G3ip proof of ``seq``, or None if none exists.

    Antecedents are handled as sets with loop checking along each branch;
    duplicates are put back by depth-preserving weakening.
    """
    budget = [max_nodes]

    def fix(proof: IProof, ante: tuple) -> IProof:
        extra = multiset_minus(ante, proof.conclusion.ante)
        return weaken(proof, extra) if extra else proof

    def dedup(items):
        return tuple(dict.fromkeys(items))

    def go(ante: tuple, goal: Formula, history: frozenset) -> IProof | None:
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("search_i: node budget exhausted")
        key = (frozenset(ante), goal)
        if key in history:
            return None
        history = history | {key}
        seq = ISequent(ante, goal)
        if BOT in ante:
            return IProof(seq, "LBot", BOT)
        if _letter(goal) and goal in ante:
            return IProof(seq, "Ax", goal)

        def sub(new_ante, new_goal):
            found = go(dedup(new_ante), new_goal, history)
            return None if found is None else fix(found, new_ante)

        for i, f in enumerate(ante):
            rest = ante[:i] + ante[i + 1:]
            if isinstance(f, And):
                q = sub((f.left, f.right) + rest, goal)
                return None if q is None else IProof(seq, "LAnd", f, (q,))
            if isinstance(f, Or):
                q1 = sub((f.left,) + rest, goal)
                if q1 is None:
                    return None
                q2 = sub((f.right,) + rest, goal)
                return None if q2 is None else IProof(seq, "LOr", f, (q1, q2))
        if isinstance(goal, Imp):
            q = sub((goal.left,) + ante, goal.right)
            return None if q is None else IProof(seq, "RImp", goal, (q,))
        if isinstance(goal, And):
            q1 = sub(ante, goal.left)
            if q1 is None:
                return None
            q2 = sub(ante, goal.right)
            return None if q2 is None else IProof(seq, "RAnd", goal, (q1, q2))
        if isinstance(goal, Or):
            for rule, part in (("ROr1", goal.left), ("ROr2", goal.right)):
                q = sub(ante, part)
                if q is not None:
                    return IProof(seq, rule, goal, (q,))
        for i, f in enumerate(ante):
            if isinstance(f, Imp):
                rest = ante[:i] + ante[i + 1:]
                q1 = sub(ante, f.left)
                if q1 is None:
                    continue
                q2 = sub((f.right,) + rest, goal)
                if q2 is not None:
                    return IProof(seq, "LImp", f, (q1, q2))
        return None

    start = dedup(seq.ante)
    found = go(start, seq.succ, frozenset())
    return None if found is None else fix(found, seq.ante)
