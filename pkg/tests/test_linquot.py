import pytest
from hypothesis import given, settings, strategies as st

from homshift import borel
from homshift.io import parse_ideal as P
from homshift.linquot import (
    UNDECIDED,
    Leaf,
    LinearQuotientCertificate,
    Node,
    OrderFailure,
    find_linear_quotient_order,
    has_linear_quotients,
    hs1_linearly_related,
    hs_stable,
    hs_via_sets,
    is_stable,
    is_vertex_splittable,
    projdim_via_sets,
    tree_order,
    verify_order,
)
from homshift.monomial import colon_monomial, minimalize, squarefree
from homshift.oracle import has_linear_resolution, hs_oracle, projdim
from strategies import ideals

P4C = P("x1*x3, x1*x4, x2*x4")
LQ_WITNESS = P("x2*x4, x1*x2, x1*x3")


def test_verify_order_examples():
    cert = verify_order(LQ_WITNESS, [(0, 1, 0, 1), (1, 1, 0, 0), (1, 0, 1, 0)])
    assert cert.sets == (frozenset(), frozenset({3}), frozenset({1}))
    assert verify_order(P("x1*x2^2"), [(1, 2)]).sets == (frozenset(),)
    for order in [[(1, 1, 0, 0), (0, 0, 1, 1)], [(0, 0, 1, 1), (1, 1, 0, 0)]]:
        fail = verify_order(P("x1*x2, x3*x4"), order)
        assert isinstance(fail, OrderFailure) and fail.position == 1
    with pytest.raises(ValueError):
        verify_order(LQ_WITNESS, [(0, 1, 0, 1)])


def test_find_order_examples():
    cert = find_linear_quotient_order(P4C)
    assert isinstance(cert, LinearQuotientCertificate)
    assert find_linear_quotient_order(P("x1*x2, x3*x4")) is None
    assert find_linear_quotient_order(P("x1^2*x3")).sets == (frozenset(),)
    assert has_linear_quotients(P4C) is True


def test_lex_certificate_of_path_complement():
    cert = verify_order(P4C, sorted(P4C.gens, reverse=True))
    assert cert.sets == (frozenset(), frozenset({2}), frozenset({0}))
    assert projdim_via_sets(cert) == 1 == projdim(P4C)


def test_undecided_above_cap():
    I = P("x1*x2, x3*x4, x5*x6")
    assert find_linear_quotient_order(I, cap=2, node_budget=1) is UNDECIDED
    assert has_linear_quotients(I, cap=2) is not False
    assert not UNDECIDED and repr(UNDECIDED) == "UNDECIDED"


def test_hs_via_sets_examples():
    cert = find_linear_quotient_order(LQ_WITNESS)
    assert hs_via_sets(cert, 1) == P("x1*x2*x3, x1*x2*x4")
    assert hs_via_sets(cert, 0) == LQ_WITNESS
    assert hs_via_sets(cert, 5).is_zero()


def test_projdim_via_sets_examples():
    assert projdim_via_sets(find_linear_quotient_order(P("x1*x2"))) == 0
    assert projdim_via_sets(find_linear_quotient_order(P("x1,x2,x3,x4"))) == 3


def test_hs_stable_examples():
    assert hs_stable(P("x1^2,x1*x2,x2^2"), 1) == P("x1^2*x2, x1*x2^2")
    I = P("x1^3, x1^2*x2, x1*x2^2")
    assert hs_stable(I, 0) == I
    assert hs_stable(I, 1) == P("x1^3*x2, x1^2*x2^2")
    with pytest.raises(ValueError):
        hs_stable(P("x2^2"), 1)


def test_hs1_linearly_related_examples():
    assert hs1_linearly_related(P("x1^3, x1^2*x2, x1*x2^2"), 0) == P("x1^3*x2, x1^2*x2^2")
    assert hs1_linearly_related(P("x1*x2*x3")).is_zero()
    C5 = P("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1")
    assert hs1_linearly_related(C5, 0) == P("x1*x2*x3, x2*x3*x4, x3*x4*x5, x1*x4*x5, x1*x2*x5")
    with pytest.raises(ValueError):
        hs1_linearly_related(P("x1*x2, x3*x4"), 0)
    with pytest.raises(ValueError):
        hs1_linearly_related(P("x1, x2^2"))


def test_vertex_splittable_examples():
    tree = is_vertex_splittable(P4C)
    assert isinstance(tree, Node) and tree.variable == 0
    assert tree.left.ideal == P("x3, x4", 4) and tree.right.ideal == P("x2*x4")
    assert isinstance(is_vertex_splittable(P("x1*x2")), Leaf)
    assert is_vertex_splittable(P("x1*x2, x3*x4")) is None
    assert isinstance(verify_order(P4C, tree_order(tree)), LinearQuotientCertificate)


@settings(max_examples=80, deadline=None)
@given(ideals(max_vars=4, max_gens=5), st.sampled_from([0, 2]))
def test_set_formula_matches_oracle(I, p):
    cert = find_linear_quotient_order(I)
    if not cert:
        return
    degs = [sum(u) for u in cert.order]
    assert degs == sorted(degs)
    n = I.nvars
    for k, (u, s) in enumerate(zip(cert.order, cert.sets)):
        colon = colon_monomial(minimalize(cert.order[:k], n), u)
        assert colon == minimalize([squarefree([i], n) for i in s], n)
    for j in range(n + 1):
        assert hs_via_sets(cert, j) == hs_oracle(I, j, p)
    assert projdim_via_sets(cert) == projdim(I, p)


@settings(max_examples=60, deadline=None)
@given(ideals(max_vars=4, max_gens=5))
def test_vertex_splittable_implies_linear_quotients(I):
    tree = is_vertex_splittable(I)
    if tree:
        assert find_linear_quotient_order(I)
        assert isinstance(verify_order(I, tree_order(tree)), LinearQuotientCertificate)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_stable_closure_matches_eliahou_kervaire(n, data):
    seeds = data.draw(st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n).filter(any), min_size=1, max_size=2))
    I = borel.stable_closure(seeds, n)
    assert is_stable(I)
    for j in range(n):
        assert hs_stable(I, j) == hs_oracle(I, j)


def test_criterion_on_exhaustive_orders():
    from itertools import permutations

    for I in [P4C, P("x1*x2, x2*x3, x3*x4"), P("x1*x2, x3*x4"), P("x1^2, x1*x2, x2^2, x2*x3")]:
        for order in permutations(I.gens):
            lq = isinstance(verify_order(I, order), LinearQuotientCertificate)
            lr = all(has_linear_resolution(minimalize(order[: k + 1], I.nvars)) for k in range(len(order)))
            assert lq == lr
