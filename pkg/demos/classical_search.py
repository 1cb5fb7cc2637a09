"""Classical proof search: proofs for valid sequents, countermodels otherwise."""
from decvars import check_c, parse, render_ascii, search_c, taut_oracle

proof = search_c(parse("(p->q)->p => p"))
check_c(proof)
print(render_ascii(proof))
print("size", proof.size, "depth", proof.depth)

# invalid sequents come back as a falsifying valuation
cm = search_c(parse("p -> q => q -> p"))
print("\ncountermodel:", cm.valuation)

# search and truth tables always agree
for text in ["=> p | ~p", "p | q => p", "~~p => p", "p & ~p => q"]:
    seq = parse(text)
    print(f"{text:<12} search={bool(search_c(seq))!s:<5} table={taut_oracle(seq)}")
