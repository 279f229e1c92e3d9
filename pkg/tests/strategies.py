from hypothesis import strategies as st

from homshift.monomial import minimalize


@st.composite
def monomials(draw, n, max_deg=3):
    return tuple(draw(st.lists(st.integers(0, max_deg), min_size=n, max_size=n)))


@st.composite
def ideals(draw, max_vars=4, max_gens=5, max_deg=3, proper=True):
    n = draw(st.integers(1, max_vars))
    gens = draw(st.lists(monomials(n, max_deg), min_size=1, max_size=max_gens))
    if proper:
        gens = [g for g in gens if any(g)] or [tuple(1 if i == 0 else 0 for i in range(n))]
    return minimalize(gens, n)
