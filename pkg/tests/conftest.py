import random

import pytest
from hypothesis import strategies as st

from decvars.formula import BOT, STAR, And, Atom, Imp, Or


def formulas(names=("p", "q", "r"), bot=True, star=False, max_leaves=8):
    leaves = [st.sampled_from([Atom(n) for n in names])]
    if bot:
        leaves.append(st.just(BOT))
    if star:
        leaves.append(st.just(STAR))
    ctor = st.sampled_from([And, Or, Imp])
    return st.recursive(
        st.one_of(*leaves),
        lambda sub: st.builds(lambda c, a, b: c(a, b), ctor, sub, sub),
        max_leaves=max_leaves,
    )


@pytest.fixture
def rng():
    return random.Random(20240611)
