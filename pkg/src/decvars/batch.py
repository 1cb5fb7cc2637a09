"""Sequent enumeration, random formulas and the batch report."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .decide import decide_i
from .formula import BOT, STAR, And, Atom, Formula, Imp, ISequent, Or, Sequent, atoms, neg, render_sequent
from .g3cp import CProof, ProofCheckError, search_c
from .g3ip import check_i
from .polarity import pi
from .translate import translate_theorem

__all__ = ["formulas_of_weight", "enumerate_sequents", "random_formula", "BatchRow", "batch_row", "batch",
           "row_dict"]


@lru_cache(maxsize=None)
def formulas_of_weight(atom_names: tuple, w: int, include_bot: bool = False) -> tuple:
    """All formulas of exactly weight ``w`` over the atoms; negation ``~A``
    (weight of A plus 2) is always available, a bare ``bot`` leaf only with ``include_bot``."""
    if w < 1:
        return ()
    if w == 1:
        leaves = tuple(Atom(a) for a in atom_names)
        return leaves + ((BOT,) if include_bot else ())
    out = []
    if w >= 3 and not include_bot:
        out.extend(neg(f) for f in formulas_of_weight(atom_names, w - 2, include_bot))
    for lw in range(1, w - 1):
        rw = w - 1 - lw
        for left in formulas_of_weight(atom_names, lw, include_bot):
            for right in formulas_of_weight(atom_names, rw, include_bot):
                out.append(And(left, right))
                out.append(Or(left, right))
                out.append(Imp(left, right))
    return tuple(dict.fromkeys(out))


def enumerate_sequents(atom_names: Sequence[str], max_weight: int, max_ante: int = 2,
                       include_bot: bool = False) -> Iterator[Sequent]:
    """Sequents ``A1, ..., Ak => B`` with ``k <= max_ante`` and total weight at most ``max_weight``.

    The antecedent is a multiset, so each is produced once; order is by
    total weight, then antecedent size, then formula order.
    """
    names = tuple(atom_names)
    if not names:
        raise ValueError("enumerate_sequents needs at least one atom")
    if max_weight < 2:
        raise ValueError("max_weight must be at least 2")
    by_weight = {w: formulas_of_weight(names, w, include_bot) for w in range(1, max_weight + 1)}
    for total in range(1, max_weight + 1):
        for k in range(max_ante + 1):
            for *ante_w, succ_w in _weight_splits(total, k):
                for ante in _ante_multisets(by_weight, ante_w):
                    for succ in by_weight[succ_w]:
                        yield Sequent(ante, (succ,))


def _weight_splits(total: int, k: int) -> Iterator[tuple]:
    """Weights ``(a1 <= ... <= ak, s)`` of k antecedents and one succedent summing to ``total``."""
    def go(remaining, n, low):
        if n == 0:
            if remaining >= 1:
                yield (remaining,)
            return
        for w in range(low, remaining):
            for tail in go(remaining - w, n - 1, w):
                yield (w,) + tail
    yield from go(total, k, 1)


def _ante_multisets(by_weight: dict, weights: list) -> Iterator[tuple]:
    # equal weights share one combinations_with_replacement so each multiset appears once
    groups: dict[int, int] = {}
    for w in weights:
        groups[w] = groups.get(w, 0) + 1
    parts = [list(combinations_with_replacement(by_weight[w], n)) for w, n in sorted(groups.items())]

    def go(i):
        if i == len(parts):
            yield ()
            return
        for chunk in parts[i]:
            for tail in go(i + 1):
                yield chunk + tail
    yield from go(0)


def random_formula(rng: random.Random, atom_names: Sequence[str], max_weight: int,
                   star: bool = False, bot: bool = True) -> Formula:
    """A random formula of weight at most ``max_weight``."""
    leaves = [Atom(a) for a in atom_names] + ([BOT] if bot else []) + ([STAR] if star else [])
    w = rng.randrange(1, max_weight + 1, 2) if max_weight >= 1 else 1

    def build(budget: int) -> Formula:
        if budget < 3:
            return rng.choice(leaves)
        left = rng.randrange(1, budget - 1, 2)
        ctor = rng.choice((And, Or, Imp))
        return ctor(build(left), build(budget - 1 - left))

    return build(w)


@dataclass
class BatchRow:
    sequent: str
    valid: bool
    v_size: int
    baseline_size: int
    check: str | None = None
    oracle: str | None = None
    extended_size: int | None = None
    pure_size: int | None = None


def batch_row(seq: Sequent) -> BatchRow:
    names = atoms(seq.ante) | atoms(seq.succ)
    found = search_c(seq)
    if not isinstance(found, CProof):
        return BatchRow(render_sequent(seq), False, 0, len(names))
    result = translate_theorem(found)
    try:
        check_i(result.proof, allow_structural=True)
        check_i(result.pure_proof)
        expected = ISequent(pi(result.V) + seq.ante, seq.succ[0])
        status = "ok" if (result.proof.conclusion == expected
                          and result.pure_proof.conclusion == expected) else "wrong conclusion"
    except ProofCheckError as e:
        status = f"error: {e}"
    oracle = "ok" if decide_i(result.pure_proof.conclusion) else "rejected"
    return BatchRow(render_sequent(seq), True, len(result.V), len(names), status, oracle,
                    result.proof.size, result.pure_proof.size)


def batch(sequents, jobs: int = 1) -> list[BatchRow]:
    """One row per sequent, in input order."""
    sequents = list(sequents)
    if jobs <= 1:
        return [batch_row(s) for s in sequents]
    with ProcessPoolExecutor(jobs) as pool:
        return list(pool.map(batch_row, sequents, chunksize=64))


def row_dict(row: BatchRow) -> dict:
    return {k: v for k, v in asdict(row).items() if v is not None}
