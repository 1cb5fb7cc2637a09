import itertools
import random

import pytest

from decvars.batch import batch, batch_row, enumerate_sequents, formulas_of_weight, random_formula, row_dict
from decvars.formula import BOT, And, Atom, Imp, Or, Sequent, parse, weight


def brute_force(names, max_weight):
    """Every sequent with at most two antecedents, built by closing the language under the connectives."""
    by_weight = {1: {Atom(n) for n in names}}
    for w in range(2, max_weight + 1):
        layer = set()
        if w >= 3:
            layer |= {Imp(f, BOT) for f in by_weight[w - 2]}
        for lw in range(1, w - 1):
            for a in by_weight[lw]:
                for b in by_weight[w - 1 - lw]:
                    layer |= {And(a, b), Or(a, b), Imp(a, b)}
        by_weight[w] = layer
    pool = [f for w in sorted(by_weight) for f in by_weight[w]]
    out = set()
    for k in range(3):
        for ante in itertools.combinations_with_replacement(pool, k):
            rest = max_weight - sum(map(weight, ante))
            for succ in pool:
                if weight(succ) <= rest:
                    out.add(Sequent(ante, (succ,)))
    return out


@pytest.mark.parametrize("names,w", [(["p"], 7), (["p", "q"], 6)])
def test_enumeration_matches_brute_force(names, w):
    listed = list(enumerate_sequents(names, w))
    assert len(listed) == len(set(listed))
    assert set(listed) == brute_force(names, w)


def test_small_examples_present():
    listed = set(enumerate_sequents(["p"], 4))
    for text in ["p => p", "=> ~p", "~p => p"]:
        assert parse(text) in listed
    assert parse("p => p") in set(enumerate_sequents(["p"], 2))


def test_deterministic_order():
    assert list(enumerate_sequents(["p", "q"], 6)) == list(enumerate_sequents(["p", "q"], 6))


def test_known_counts():
    assert sum(1 for _ in enumerate_sequents(["p", "q"], 8)) == 23_028


def test_preconditions():
    with pytest.raises(ValueError):
        list(enumerate_sequents([], 4))
    with pytest.raises(ValueError):
        list(enumerate_sequents(["p"], 1))


def test_formulas_of_weight():
    assert formulas_of_weight(("p",), 1) == (Atom("p"),)
    assert set(formulas_of_weight(("p",), 3)) == {parse("~p"), parse("p & p"), parse("p | p"), parse("p -> p")}
    assert BOT in formulas_of_weight(("p",), 1, include_bot=True)


def test_random_formula_respects_weight():
    rng = random.Random(0)
    for _ in range(200):
        assert weight(random_formula(rng, ("p", "q"), 9)) <= 9


def test_rows():
    row = batch_row(parse("(p->q)->p => p"))
    assert row.valid and row.v_size == 1 and row.baseline_size == 2
    assert row.check == "ok" and row.oracle == "ok"
    assert row.pure_size <= row.extended_size
    bad = batch_row(parse("p => q"))
    assert not bad.valid and bad.check is None
    assert set(row_dict(bad)) == {"sequent", "valid", "v_size", "baseline_size"}


def test_batch_small_domain():
    seqs = list(enumerate_sequents(["p", "q"], 6))
    rows = batch(seqs)
    assert [r.sequent for r in rows] == [str(s) for s in seqs]
    for r in rows:
        assert r.v_size <= r.baseline_size
        if r.valid:
            assert (r.check, r.oracle) == ("ok", "ok")


def test_batch_parallel_keeps_order():
    seqs = list(enumerate_sequents(["p"], 6))
    assert batch(seqs, jobs=2) == batch(seqs, jobs=1)
