"""The star-level lemma library and substitution for *."""
from decvars import build_lemma, check_i, eliminate_structural, parse, render_ascii, subst_star_proof

p, q = parse("p"), parse("q")

for index, params in [(1, (p,)), (3, (p, q)), (8, (p, q))]:
    proof = build_lemma(index, *params)
    check_i(proof, allow_structural=True)
    pure = eliminate_structural(proof)
    print(f"lemma {index}: {proof.conclusion}   ({proof.size} -> {pure.size} nodes)")

# replacing * by bot turns the star-negations into ordinary negations
lemma = eliminate_structural(build_lemma(1, p))
print("\nbefore:", lemma.conclusion)
swapped = subst_star_proof(lemma, parse("bot"))
check_i(swapped)
print("after: ", swapped.conclusion)
print(render_ascii(swapped))
