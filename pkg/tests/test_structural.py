import random

import pytest

from proofgen import random_extended, random_pure
from decvars.decide import search_i
from decvars.formula import Atom, ISequent, parse
from decvars.g3ip import IProof, check_i, cut, identity_proof, lc_node, lw_node, weaken
from decvars.structural import (
    contract, contract_all, eliminate_cut, eliminate_structural, inv_land, inv_limp_right, inv_lor,
)

p, q = Atom("p"), Atom("q")


def iseq(text):
    return parse(text, intuitionistic=True, allow_star=True)


def test_contract_axiom():
    out = contract(IProof(iseq("p, p => p"), "Ax", p), p)
    assert out.conclusion == iseq("p => p")
    check_i(out)


def test_contract_conjunction():
    g = parse("p & q")
    doubled = IProof(ISequent((g, g), p), "LAnd", g, (IProof(ISequent((p, q, g), p), "Ax", p),))
    out = contract(doubled, g)
    check_i(out)
    assert out.conclusion == ISequent((g,), p)


def test_contract_needs_two_copies():
    with pytest.raises(ValueError, match="fewer than twice"):
        contract(IProof(iseq("p, q => p"), "Ax", p), p)
    with pytest.raises(ValueError):
        contract_all(IProof(iseq("p, q => p"), "Ax", p), [q])


def test_inversions():
    g = parse("p & q")
    proof = identity_proof(g)
    out = inv_land(proof, g)
    check_i(out)
    assert out.conclusion == ISequent((p, q), g)

    d = parse("p | q")
    proof = identity_proof(d)
    for side, part in ((0, p), (1, q)):
        out = inv_lor(proof, d, side)
        check_i(out)
        assert out.conclusion == ISequent((part,), d)

    i = parse("p -> q")
    proof = identity_proof(i)
    out = inv_limp_right(proof, i)
    check_i(out)
    assert out.conclusion == ISequent((q,), i)


def test_depth_preservation_on_random_proofs():
    rng = random.Random(3)
    for _ in range(150):
        proof = random_pure(rng)
        if not proof.conclusion.ante:
            continue
        f = rng.choice(proof.conclusion.ante)
        doubled = weaken(proof, [f])
        assert doubled.depth == proof.depth
        out = contract(doubled, f)
        check_i(out)
        assert out.conclusion == proof.conclusion
        assert out.depth <= doubled.depth


def test_pure_proof_unchanged():
    proof = identity_proof(parse("p -> q"))
    assert eliminate_structural(proof) is proof


def test_atomic_cut_against_axiom():
    leaf = IProof(iseq("p => p"), "Ax", p)
    out = eliminate_structural(cut(leaf, leaf, p))
    assert out.rule == "Ax" and out.conclusion == iseq("p => p")


def test_principal_cuts():
    # every connective as cut formula against its left rule
    for text, consumer in [
        ("p & q", "p & q => q & p"),
        ("p | q", "p | q => q | p"),
        ("p -> q", "p -> q, p => q"),
    ]:
        a = parse(text)
        seq = iseq(consumer)
        right = search_i(seq)
        left = identity_proof(a)
        out = eliminate_cut(left, right, a)
        check_i(out)
        assert out.conclusion == seq


def test_lw_and_lc_nodes():
    leaf = IProof(iseq("p => p"), "Ax", p)
    w = lw_node(leaf, [q, p])
    out = eliminate_structural(lc_node(w, p))
    check_i(out)
    assert out.conclusion == iseq("p, q => p")


def test_random_compositions():
    rng = random.Random(11)
    for _ in range(200):
        proof = random_extended(rng, rng.randint(1, 4))
        check_i(proof, allow_structural=True)
        out = eliminate_structural(proof)
        check_i(out)
        assert out.conclusion == proof.conclusion
