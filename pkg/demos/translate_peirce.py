"""From a classical proof of Peirce's law to an intuitionistic one.

The translated proof lives in G3ip and has the single excluded-middle
instance p | ~p as an extra hypothesis.
"""
from decvars import check_i, decide_i, parse, render_ascii, search_c, translate_theorem

classical = search_c(parse("(p->q)->p => p"))
result = translate_theorem(classical)

print("V =", sorted(result.V))
print("with cuts and structural rules:", result.proof.size, "nodes")
print("after elimination:", result.pure_proof.size, "nodes\n")
check_i(result.pure_proof)
print(render_ascii(result.pure_proof))

# without the hypothesis the end-sequent is not intuitionistically derivable
goal = result.pure_proof.conclusion
print("\nderivable with p | ~p:", decide_i(goal))
print("derivable without:", decide_i(parse("(p->q)->p => p", intuitionistic=True)))
