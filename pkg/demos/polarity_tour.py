"""Which atoms need excluded middle?

Walks a few formulas through the polarity computation and shows how the
set V shrinks the classical-to-intuitionistic gap to a handful of atoms.
"""
from decvars import em_set, parse, pi, polarity

for text in ["(p->q)->p", "p -> q | r", "~~p -> p", "bot -> p", "(p->q)->q"]:
    r = polarity(parse(text))
    print(f"{text:<14} V+={sorted(r.vpos)}  V-={sorted(r.vneg)}  V+ns={sorted(r.vpos_ns)}")

# Peirce: p sits positively on both sides, q only on the left, so only p needs p | ~p
seq = parse("(p->q)->p => p")
V = em_set(seq.ante, seq.succ[0])
print("\nPeirce needs", [str(f) for f in pi(V)])

# a sequent with three atoms where only one of them matters
seq = parse("p -> q | r => (p->q) | (p->r)")
print("distribution needs", sorted(em_set(seq.ante, seq.succ[0])), "out of", ["p", "q", "r"])
