import random

import pytest
from hypothesis import given, settings, strategies as st

from homshift.graphs import (
    Graph,
    chordal_peo,
    complement,
    complete_graph,
    cycle_graph,
    edge_ideal,
    hs_chordal_complement,
    hs_path_complement,
    hs_whisker_top,
    interval_bounds,
    interval_graph,
    is_chordal,
    is_peo,
    maximal_independent_sets,
    path_graph,
    peo_relabeling,
    set_formula_complement,
    whisker,
)
from homshift.io import parse_ideal as P
from homshift.linquot import find_linear_quotient_order, is_vertex_splittable, verify_order, LinearQuotientCertificate
from homshift.oracle import has_linear_resolution, hs_oracle, projdim
from homshift.suite import random_chordal_graph, random_interval_cliques

P4 = path_graph(4)


def test_constructor_examples():
    assert complement(P4).edges == {(0, 2), (0, 3), (1, 3)}
    assert edge_ideal(Graph.from_edges(2, [(0, 1)])) == P("x1*x2")
    assert whisker(Graph.from_edges(2, [(0, 1)])).edges == {(0, 1), (0, 2), (1, 3)}
    assert cycle_graph(4).edges == {(0, 1), (1, 2), (2, 3), (0, 3)}
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_peo_examples():
    for n in range(1, 7):
        assert is_peo(path_graph(n), list(range(n)))
        assert is_peo(complete_graph(n), list(range(n))[::-1])
    assert chordal_peo(cycle_graph(4)) is None
    assert is_peo(P4, chordal_peo(P4))


def test_peo_relabeling():
    peo = [2, 0, 3, 1]
    perm = peo_relabeling(peo)
    assert [perm[v] for v in peo] == [0, 1, 2, 3]


def test_chordal_formula_examples():
    assert hs_chordal_complement(P4, range(4), 1) == P("x1*x2*x4, x1*x3*x4")
    assert hs_chordal_complement(P4, range(4), 0) == edge_ideal(complement(P4))
    for k in range(3):
        assert hs_chordal_complement(complete_graph(4), range(4), k).is_zero()
    with pytest.raises(ValueError):
        hs_chordal_complement(cycle_graph(4), range(4), 0)


def test_set_formula_examples():
    assert set_formula_complement(P4, 1, 3) == {0}
    assert set_formula_complement(P4, 0, 2) == set()
    assert set_formula_complement(P4, 0, 3) == {2}
    with pytest.raises(ValueError):
        set_formula_complement(P4, 0, 1)


def test_path_complement_examples():
    assert hs_path_complement(4, 1) == P("x1*x2*x4, x1*x3*x4")
    assert hs_path_complement(5, 3).is_zero()
    assert hs_path_complement(4, 0) == P("x1*x3, x1*x4, x2*x4")


def test_interval_bounds_examples():
    for n in range(3, 8):
        b = interval_bounds(n, [[i, i + 1] for i in range(n - 1)])
        assert b.s == 1 and b.max_nonzero_k == n - 3 == b.projdim
    with pytest.raises(ValueError):
        interval_bounds(3, [[0, 1, 2]])
    b = interval_bounds(4, [[0, 1, 2], [1, 2, 3]])
    assert (b.s, b.max_nonzero_k) == (2, 0)
    I = edge_ideal(complement(interval_graph(4, [[0, 1, 2], [1, 2, 3]])))
    assert not hs_oracle(I, 0).is_zero() and hs_oracle(I, 1).is_zero()
    for bad in ([[0, 2], [1, 2, 3]], [[1, 2, 3], [0, 1]], [[0, 1]], [[0, 1], [1, 2]]):
        with pytest.raises(ValueError):
            interval_bounds(4, bad)


def test_independent_sets_examples():
    assert maximal_independent_sets(Graph.from_edges(2, [(0, 1)])) == [{0}, {1}]
    assert maximal_independent_sets(Graph(3, frozenset())) == [{0, 1, 2}]
    assert maximal_independent_sets(P4) == [{0, 2}, {0, 3}, {1, 3}]


def test_whisker_examples():
    assert hs_whisker_top(Graph.from_edges(2, [(0, 1)])) == P("x1*x2*x3, x1*x2*x4")
    assert hs_whisker_top(Graph(1, frozenset())) == P("x1*x2")
    assert hs_whisker_top(path_graph(3)) == P("x1*x2*x3*x4*x6, x1*x2*x3*x5")
    for G in [path_graph(3), cycle_graph(4), complete_graph(3)]:
        assert hs_whisker_top(G) == hs_oracle(edge_ideal(whisker(G)), G.n - 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_chordal_formula_matches_oracle(n, seed):
    G = random_chordal_graph(random.Random(seed), n)
    peo = chordal_peo(G)
    assert peo is not None
    I = edge_ideal(complement(G))
    if I.is_zero():
        return
    for k in range(n):
        assert hs_chordal_complement(G, peo, k) == hs_oracle(I, k)
    tree = is_vertex_splittable(hs_oracle(I, 1))
    assert tree is not None


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_froberg(n, seed):
    rng = random.Random(seed)
    G = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.6])
    I = edge_ideal(complement(G))
    if not I.is_zero():
        assert has_linear_resolution(I) == is_chordal(G)


@pytest.mark.parametrize("n", range(4, 9))
def test_path_complement_structure(n):
    I = edge_ideal(complement(path_graph(n)))
    previous = None
    for k in range(1, n - 2):
        H = hs_path_complement(n, k)
        assert H == hs_oracle(I, k)
        cert = verify_order(H, H.gens)
        assert isinstance(cert, LinearQuotientCertificate)
        assert find_linear_quotient_order(H)
        assert projdim(H) == n - k - 2
        if previous is not None:
            assert projdim(H) < previous
        previous = projdim(H)
    assert hs_path_complement(n, n - 2).is_zero()


def test_projdim_formula_misses_k_zero():
    # projdim of I(P_4^c) itself is 1, not n - 0 - 2 = 2
    assert projdim(hs_path_complement(4, 0)) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10**6))
def test_interval_threshold(n, seed):
    cliques = [[v - 1 for v in L] for L in random_interval_cliques(random.Random(seed), n)]
    b = interval_bounds(n, cliques)
    I = edge_ideal(complement(interval_graph(n, cliques)))
    assert projdim(I) == b.projdim
    for k in range(n):
        assert (not hs_oracle(I, k).is_zero()) == (k <= b.max_nonzero_k)
