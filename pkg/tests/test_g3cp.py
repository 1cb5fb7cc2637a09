import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import formulas
from decvars.batch import enumerate_sequents
from decvars.formula import BOT, Atom, Imp, Sequent, parse, weight
from decvars.g3cp import CProof, Countermodel, ProofCheckError, check_c, evaluate, search_c, taut_oracle

p, q = Atom("p"), Atom("q")


def test_check_axiom_with_context():
    check_c(CProof(parse("p, q => q, p"), "Ax", p))


def test_check_one_step():
    leaf = CProof(parse("p => p"), "Ax", p)
    check_c(CProof(parse("=> p -> p"), "RImp", Imp(p, p), (leaf,)))


def test_axiom_on_compound_rejected():
    with pytest.raises(ProofCheckError, match="variable"):
        check_c(CProof(parse("p & q => p & q"), "Ax", parse("p & q")))


def test_checker_reports_path():
    bad_leaf = CProof(parse("p => q"), "Ax", p)
    proof = CProof(parse("=> p -> q"), "RImp", parse("p -> q"), (bad_leaf,))
    with pytest.raises(ProofCheckError) as e:
        check_c(proof)
    assert e.value.path == (0,)


def test_checker_rejects_wrong_arity_and_premise():
    leaf = CProof(parse("p => p"), "Ax", p)
    with pytest.raises(ProofCheckError, match="premises"):
        check_c(CProof(parse("=> p -> p"), "RImp", Imp(p, p), (leaf, leaf)))
    wrong = CProof(parse("q, p => p"), "Ax", p)
    with pytest.raises(ProofCheckError, match="does not match"):
        check_c(CProof(parse("=> p -> p"), "RImp", Imp(p, p), (wrong,)))
    with pytest.raises(ProofCheckError, match="unknown rule"):
        check_c(CProof(parse("p => p"), "Id", p))


def test_lbot():
    check_c(CProof(parse("bot, p => q"), "LBot", BOT))
    with pytest.raises(ProofCheckError):
        check_c(CProof(parse("p => q"), "LBot", BOT))


@pytest.mark.parametrize("text", ["(p->q)->p => p", "p -> q | r => (p->q) | (p->r)", "=> p | ~p",
                                  "~~p => p", "p & q => q & p", "bot => p"])
def test_search_finds_checked_proofs(text):
    proof = search_c(parse(text))
    assert isinstance(proof, CProof)
    check_c(proof)
    assert proof.conclusion == parse(text)


def test_countermodel():
    result = search_c(parse("p => q"))
    assert isinstance(result, Countermodel) and not result
    assert result.valuation == {"p": True, "q": False}


def test_search_rejects_star():
    with pytest.raises(ValueError):
        search_c(parse("* => p", allow_star=True))


def test_oracle_examples():
    assert taut_oracle(parse("=> p | ~p"))
    assert not taut_oracle(parse("p => q"))
    assert taut_oracle(parse("(p->q)->p => p"))
    assert taut_oracle(parse("* => *", allow_star=True))


def _agree(seq):
    result = search_c(seq)
    if isinstance(result, CProof):
        check_c(result)
        assert result.conclusion == seq
        return taut_oracle(seq)
    v = result.valuation
    assert all(evaluate(f, v) for f in seq.ante)
    assert not any(evaluate(f, v) for f in seq.succ)
    return not taut_oracle(seq)


def test_exhaustive_three_atoms():
    # three atoms, weight 8, at most two antecedents
    bad = [s for s in enumerate_sequents(["p", "q", "r"], 8) if not _agree(s)]
    assert bad == []


@settings(max_examples=400, deadline=None)
@given(st.lists(formulas(max_leaves=5), max_size=3), st.lists(formulas(max_leaves=5), max_size=2))
def test_random_sequents_up_to_weight_12(ante, succ):
    seq = Sequent(tuple(ante), tuple(succ))
    if seq.weight <= 12:
        assert _agree(seq)


def test_weight_decreases_along_proofs():
    proof = search_c(parse("p -> q, q -> r, p | q => (p & q) | r"))
    assert isinstance(proof, CProof)

    def walk(node):
        for sub in node.premises:
            assert sub.conclusion.weight < node.conclusion.weight
            walk(sub)

    walk(proof)
    assert weight(parse("p -> q")) == 3
