import warnings
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from homshift.borel import (
    BorelSpec,
    NotEquigeneratedWarning,
    borel_closure,
    borel_order_leq,
    c_bounded_borel_closure,
    closure,
    hs_veronese,
    is_c_bounded_strongly_stable,
    is_polymatroidal,
    is_strongly_stable,
    satisfies_strong_exchange,
    support_restriction,
    unbounded,
    veronese,
    veronese_principal_generator,
)
from homshift.io import parse_ideal as P
from homshift.monomial import contains, restrict, times_monomial
from homshift.oracle import has_linear_resolution, hs_oracle

NON_STRONG = P("x1*x2*x3*x4, x2^2*x4^2, x2*x3*x4^2, x1*x2^2*x4")


def test_strong_stability_examples():
    assert is_strongly_stable(P("x1^2, x1*x2, x2^2"))
    assert is_c_bounded_strongly_stable(P("x1*x2, x2^2"), [1, 2])
    assert not is_strongly_stable(P("x2^2", 2))


def test_closure_examples():
    assert borel_closure([(0, 2)], 2) == P("x1^2, x1*x2, x2^2")
    assert borel_closure([(3, 0)], 2) == P("x1^3", 2)
    assert borel_closure([(1, 0, 1)], 3) == P("x1^2, x1*x2, x1*x3")
    assert c_bounded_borel_closure([(0, 2)], [1, 2]) == P("x1*x2, x2^2")
    assert c_bounded_borel_closure([(1, 2)], [None, None]) == borel_closure([(1, 2)], 2)
    assert c_bounded_borel_closure([(2, 1)], [2, 1]) == P("x1^2*x2")
    assert closure(BorelSpec(((0, 2),), (1, 2)), 2) == P("x1*x2, x2^2")
    with pytest.raises(ValueError):
        c_bounded_borel_closure([(0, 2)], [1, 1])


def test_borel_order_examples():
    assert borel_order_leq((1, 1), (0, 2))
    assert borel_order_leq((1, 1), (1, 1))
    assert not borel_order_leq((0, 2), (1, 1))
    with pytest.raises(ValueError):
        borel_order_leq((1, 0), (1, 1))


def test_veronese_examples():
    assert veronese([1, 1, 1], 3, 2) == P("x1*x2, x1*x3, x2*x3")
    assert veronese([1, 0, 0], 3, 2).is_zero()
    assert veronese([2, 2], 2, 2) == P("x1^2, x1*x2, x2^2")


def test_principal_generator_examples():
    assert veronese_principal_generator([5, 5, 5], 3, 2) == (0, 0, 2)
    assert veronese_principal_generator([1, 1, 1], 3, 2) == (0, 1, 1)
    assert veronese_principal_generator([1, 2, 1], 3, 4) == (1, 2, 1)


def test_support_restriction_examples():
    I = veronese([2, 2, 2], 3, 3)
    assert support_restriction(I, 0) == I
    assert support_restriction(I, 1) == P("x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3, x1*x3^2, x2^2*x3, x2*x3^2")
    assert support_restriction(I, 3).is_zero()


def test_hs_veronese_examples():
    assert hs_veronese([1, 1, 1], 3, 2, 1) == P("x1*x2*x3")
    assert hs_veronese([1, 1, 1], 3, 2, 0) == veronese([1, 1, 1], 3, 2)
    assert hs_veronese([1, 1, 1], 3, 2, 2).is_zero()


def test_polymatroidal_without_strong_exchange():
    assert is_polymatroidal(NON_STRONG)
    assert not satisfies_strong_exchange(NON_STRONG)
    assert not is_polymatroidal(support_restriction(NON_STRONG, 2))
    assert support_restriction(NON_STRONG, 2) == P("x1*x2*x3*x4, x2*x3*x4^2, x1*x2^2*x4")
    assert has_linear_resolution(support_restriction(NON_STRONG, 2))


def test_non_equigenerated_predicates_warn():
    with pytest.warns(NotEquigeneratedWarning):
        assert not is_polymatroidal(P("x1, x2^2"))
    with pytest.warns(NotEquigeneratedWarning):
        assert not satisfies_strong_exchange(P("x1, x2^2"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_veronese_is_strongly_exchanging_and_principal(n):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for c in product(range(3), repeat=n):
            for d in range(1, 4):
                if sum(c) < d:
                    continue
                I = veronese(list(c), n, d)
                assert is_polymatroidal(I) and satisfies_strong_exchange(I)
                u = veronese_principal_generator(list(c), n, d)
                assert c_bounded_borel_closure([u], list(c)) == I


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_principal_bound(n, d, data):
    u = tuple(data.draw(st.lists(st.integers(0, d), min_size=n, max_size=n)))
    c = [a + data.draw(st.integers(0, 2)) for a in u]
    if not any(u):
        return
    B = c_bounded_borel_closure([u], c)
    assert B == restrict(borel_closure([u], n), c)
    assert is_c_bounded_strongly_stable(B, c)
    assert is_strongly_stable(borel_closure([u], n))
    assert closure(BorelSpec((u,), None), n) == closure(BorelSpec((u,), unbounded(n)), n)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_borel_order_matches_closure(n, d, data):
    def mono():
        cut = sorted(data.draw(st.lists(st.integers(0, d), min_size=n - 1, max_size=n - 1)))
        pts = [0] + cut + [d]
        return tuple(b - a for a, b in zip(pts, pts[1:]))

    u, v = mono(), mono()
    assert borel_order_leq(v, u) == contains(borel_closure([u], n), v)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 3), st.data())
def test_monomial_multiple_commutes_with_shifts(n, data):
    c = data.draw(st.lists(st.integers(1, 2), min_size=n, max_size=n))
    d = data.draw(st.integers(1, sum(c)))
    m = tuple(data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))
    I = veronese(c, n, d)
    for j in range(n):
        assert hs_oracle(times_monomial(I, m), j) == times_monomial(hs_oracle(I, j), m)
