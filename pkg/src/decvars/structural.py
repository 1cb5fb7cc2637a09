"""Elimination of LW, LC and Cut from G3ip proofs.

Weakening and contraction are depth-preserving; contraction relies on
depth-preserving inversion of LAnd, LOr and the right premise of LImp.
Cuts are reduced by the usual double induction on cut-formula weight and
premise depth, working bottom-up so the topmost cuts go first.
"""

from __future__ import annotations

from collections import Counter

from .formula import BOT, Formula, ISequent, multiset_minus, remove_one, render
from .g3ip import IProof, weaken

__all__ = ["inv_land", "inv_lor", "inv_limp_right", "contract", "contract_all",
           "eliminate_cut", "eliminate_structural"]

_LEFT = frozenset({"LAnd", "LOr", "LImp"})


def _with_ante(node: IProof, ante: tuple, premises: tuple) -> IProof:
    return IProof(ISequent(ante, node.conclusion.succ), node.rule, node.principal, premises)


def inv_land(proof: IProof, f: Formula) -> IProof:
    """From ``A & B, G => C`` to ``A, B, G => C``."""
    ante = (f.left, f.right) + remove_one(proof.conclusion.ante, f)
    if proof.rule == "LAnd" and proof.principal == f:
        return proof.premises[0]
    return _with_ante(proof, ante, tuple(inv_land(q, f) for q in proof.premises))


def inv_lor(proof: IProof, f: Formula, side: int) -> IProof:
    """From ``A | B, G => C`` to ``A, G => C`` (side 0) or ``B, G => C`` (side 1)."""
    part = f.left if side == 0 else f.right
    ante = (part,) + remove_one(proof.conclusion.ante, f)
    if proof.rule == "LOr" and proof.principal == f:
        return proof.premises[side]
    return _with_ante(proof, ante, tuple(inv_lor(q, f, side) for q in proof.premises))


def inv_limp_right(proof: IProof, f: Formula) -> IProof:
    """From ``A -> B, G => C`` to ``B, G => C``."""
    ante = (f.right,) + remove_one(proof.conclusion.ante, f)
    if proof.rule == "LImp" and proof.principal == f:
        return proof.premises[1]
    return _with_ante(proof, ante, tuple(inv_limp_right(q, f) for q in proof.premises))


def contract(proof: IProof, dup: Formula) -> IProof:
    """Pure proof of ``dup, G => C`` from a pure proof of ``dup, dup, G => C``."""
    c = proof.conclusion
    if c.ante.count(dup) < 2:
        raise ValueError(f"contract: {render(dup)} occurs fewer than twice in the antecedent")
    if not proof.pure:
        raise ValueError("contract expects a pure proof")
    return _contract(proof, Counter([dup]))


def contract_all(proof: IProof, formulas) -> IProof:
    """Remove one copy of each formula in ``formulas`` (a multiset) by contraction.

    Every formula must keep at least one occurrence.
    """
    drop = Counter(formulas)
    have = Counter(proof.conclusion.ante)
    for f, n in drop.items():
        if have[f] <= n:
            raise ValueError(f"contract_all: cannot drop {n} of {have[f]} copies of {render(f)}")
    return _contract(proof, drop) if drop else proof


def _contract(proof: IProof, drop: Counter) -> IProof:
    # all copies of a dropped formula are removed in one traversal
    if not drop:
        return proof
    ante = multiset_minus(proof.conclusion.ante, drop.elements())
    rule, a = proof.rule, proof.principal
    if rule in _LEFT and drop[a] > 0 and drop[a] == proof.conclusion.ante.count(a) - 1:
        # the principal formula loses its last spare copy: reduce to one, then invert it
        fewer = drop - Counter([a])
        if rule == "LAnd":
            q = inv_land(_contract(proof.premises[0], fewer), a)
            q = _contract(q, Counter([a.left, a.right]))
            return _with_ante(proof, ante, (q,))
        if rule == "LOr":
            q1 = _contract(inv_lor(_contract(proof.premises[0], fewer), a, 0), Counter([a.left]))
            q2 = _contract(inv_lor(_contract(proof.premises[1], fewer), a, 1), Counter([a.right]))
            return _with_ante(proof, ante, (q1, q2))
        left = _contract(proof.premises[0], drop)
        right = inv_limp_right(_contract(proof.premises[1], fewer), a)
        right = _contract(right, Counter([a.right]))
        return _with_ante(proof, ante, (left, right))
    return _with_ante(proof, ante, tuple(_contract(q, drop) for q in proof.premises))


def eliminate_cut(left: IProof, right: IProof, a: Formula) -> IProof:
    """Pure proof of ``G, G' => C`` from pure proofs of ``G => a`` and ``a, G' => C``."""
    gamma = left.conclusion.ante
    gamma2 = remove_one(right.conclusion.ante, a)
    goal = ISequent(gamma + gamma2, right.conclusion.succ)

    if left.rule == "Ax":
        return weaken(right, remove_one(gamma, a))
    if left.rule == "LBot":
        return IProof(goal, "LBot", BOT)
    if right.rule == "Ax":
        if right.principal in gamma2:
            return IProof(goal, "Ax", right.principal)
        return weaken(left, gamma2)
    if right.rule == "LBot" and BOT in gamma2:
        return IProof(goal, "LBot", BOT)

    if left.rule in _LEFT:
        p = left.principal
        if left.rule == "LImp":
            prems = (weaken(left.premises[0], gamma2), eliminate_cut(left.premises[1], right, a))
        else:
            prems = tuple(eliminate_cut(q, right, a) for q in left.premises)
        return IProof(goal, left.rule, p, prems)

    # the left premise ends with a right rule introducing a
    if right.rule in _LEFT and right.principal == a:
        if right.rule == "LAnd":
            t = eliminate_cut(left.premises[1], right.premises[0], a.right)
            t = eliminate_cut(left.premises[0], t, a.left)
            return contract_all(t, gamma)
        if right.rule == "LOr":
            side = 0 if left.rule == "ROr1" else 1
            part = a.left if side == 0 else a.right
            return eliminate_cut(left.premises[0], right.premises[side], part)
        t = eliminate_cut(left, right.premises[0], a)
        t = eliminate_cut(t, left.premises[0], a.left)
        t = eliminate_cut(t, right.premises[1], a.right)
        return contract_all(t, gamma + gamma2)

    prems = tuple(eliminate_cut(left, q, a) for q in right.premises)
    return IProof(goal, right.rule, right.principal, prems)


def eliminate_structural(proof: IProof) -> IProof:
    """Pure proof of the same conclusion; pure input is returned as is."""
    memo: dict[int, IProof] = {}

    def go(node: IProof) -> IProof:
        if node.pure:
            return node
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        prems = tuple(go(q) for q in node.premises)
        if node.rule == "LW":
            extra = multiset_minus(node.conclusion.ante, prems[0].conclusion.ante)
            out = weaken(prems[0], extra)
        elif node.rule == "LC":
            out = contract(prems[0], node.principal)
        elif node.rule == "Cut":
            out = eliminate_cut(prems[0], prems[1], node.cut_formula)
        else:
            out = IProof(node.conclusion, node.rule, node.principal, prems)
        memo[id(node)] = out
        return out

    return go(proof)
