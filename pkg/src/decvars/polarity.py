"""Occurrence polarity of propositional variables and the excluded-middle set."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .formula import And, Atom, Formula, Imp, Or, neg

__all__ = ["PolarityReport", "polarity", "polarity_multiset", "em_set", "em_set_general", "pi"]


@dataclass(frozen=True)
class PolarityReport:
    vpos: frozenset
    vneg: frozenset
    vpos_ns: frozenset

    def __or__(self, other: "PolarityReport") -> "PolarityReport":
        return PolarityReport(self.vpos | other.vpos, self.vneg | other.vneg,
                              self.vpos_ns | other.vpos_ns)

    def as_dict(self) -> dict:
        return {"vpos": sorted(self.vpos), "vneg": sorted(self.vneg),
                "vpos_ns": sorted(self.vpos_ns)}


_EMPTY = PolarityReport(frozenset(), frozenset(), frozenset())


@lru_cache(maxsize=65536)
def polarity(f: Formula) -> PolarityReport:
    """Positive, negative and non-strictly positive variables of ``f``.

    ``bot`` and the placeholder ``*`` contribute nothing.
    """
    if isinstance(f, Atom):
        return PolarityReport(frozenset([f.name]), frozenset(), frozenset())
    if isinstance(f, (And, Or)):
        return polarity(f.left) | polarity(f.right)
    if isinstance(f, Imp):
        a, b = polarity(f.left), polarity(f.right)
        return PolarityReport(a.vneg | b.vpos, a.vpos | b.vneg, a.vneg | b.vpos_ns)
    return _EMPTY


def polarity_multiset(formulas: Iterable[Formula]) -> PolarityReport:
    out = _EMPTY
    for f in formulas:
        out = out | polarity(f)
    return out


def em_set(gamma: Iterable[Formula], a: Formula) -> frozenset:
    """Variables needing an excluded-middle instance for ``gamma => a``:
    ``(V-(gamma) | V+(a)) & (V+ns(gamma) | V-(a))``."""
    g, r = polarity_multiset(gamma), polarity(a)
    return (g.vneg | r.vpos) & (g.vpos_ns | r.vneg)


def em_set_general(gamma: Iterable[Formula], delta: Iterable[Formula],
                   sigma: Iterable[Formula]) -> frozenset:
    """The set for a split antecedent ``gamma, delta`` and succedent ``sigma``:
    ``(V-(gamma, delta) | V+(sigma)) & (V+ns(gamma) | V+(delta) | V-(sigma))``."""
    g = polarity_multiset(gamma)
    d = polarity_multiset(delta)
    s = polarity_multiset(sigma)
    return (g.vneg | d.vneg | s.vpos) & (g.vpos_ns | d.vpos | s.vneg)


def pi(variables: Iterable[str]) -> tuple:
    """One ``p | ~p`` per variable, in name order."""
    return tuple(Or(Atom(p), neg(Atom(p))) for p in sorted(variables))
