"""Acceptance criteria, one test per criterion (criterion 2 has three parts).

Run ``pytest tests/test_acceptance.py`` for a PASS/FAIL line per criterion
in the terminal summary, or execute this file directly.
"""

import random
from itertools import product

import pytest

from homshift import borel, graphs, linquot
from homshift.io import ideal_from_dict, parse_ideal as P
from homshift.monomial import embed, ideal_product, is_subideal, localize, restrict
from homshift.oracle import hs_all, hs_oracle
from homshift.suite import REGISTRY, NON_STRONG_POLYMATROIDAL, Caps, run_suite, sets_agree

SEED = 0
CAPS = Caps(max_vars=5, max_gens=8, max_deg=4, instances=200)

GENERAL = ["shift_nested", "height_decreasing", "restriction", "localization", "polarization", "product", "last_shift_socle", "lq_iterated_shift"]
BOREL = ["bounded_borel_principal", "bounded_borel_shifts_lq"]
VERONESE = ["veronese_shifts", "strong_exchange_support"]
GRAPHS = ["chordal_complement", "path_vanishing", "path_projdim", "interval", "vertex_splittable"]

C5 = P("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1")


@pytest.fixture(scope="module")
def report():
    return run_suite(SEED, CAPS, names=GENERAL + BOREL + VERONESE + GRAPHS)


def _clean(report, names, fields=(0,)):
    for name in names:
        for f in fields:
            r = report.get(name, f)
            assert r.failed == 0, (name, f, r.first_counterexample)
            yield r


def test_criterion_1_three_routes_agree():
    I = P("x1^3, x1^2*x2, x1*x2^2")
    expected = P("x1^3*x2, x1^2*x2^2")
    assert hs_oracle(I, 1) == expected
    assert linquot.hs1_linearly_related(I, 0) == expected
    assert linquot.hs_stable(I, 1) == expected
    assert hs_oracle(I, 2).is_zero() and linquot.hs_stable(I, 2).is_zero()


def test_criterion_2a_five_cycle_shift_ideals():
    assert hs_oracle(C5, 1) == P("x1*x2*x3, x2*x3*x4, x3*x4*x5, x1*x4*x5, x1*x2*x5")
    assert hs_oracle(C5, 2) == P("x1*x2*x3*x4*x5")


@pytest.mark.xfail(strict=True, reason="HS_1(HS_1(I)) of the 5-cycle has all five squarefree quartics; "
                   "the displayed ideal omits x1*x2*x3*x5")
def test_criterion_2b_five_cycle_iterated_shift_as_displayed():
    displayed = P("x1*x2*x3*x4, x2*x3*x4*x5, x1*x3*x4*x5, x1*x2*x4*x5")
    assert hs_oracle(hs_oracle(C5, 1), 1) == displayed


@pytest.mark.xfail(strict=True, reason="x1*x2*x3*x4*x5 is divisible by x1*x2*x3*x4, so the inclusion holds")
def test_criterion_2c_five_cycle_inclusion_fails():
    assert not is_subideal(hs_oracle(C5, 2), hs_oracle(hs_oracle(C5, 1), 1))


def test_criterion_3_linear_quotients_counterexample():
    I = P("x2*x4, x1*x2, x1*x3")
    H1 = hs_oracle(I, 1)
    assert H1 == P("x1*x2*x3, x1*x2*x4")
    assert hs_oracle(H1, 1) == P("x1*x2*x3*x4")
    assert hs_oracle(I, 2).is_zero()
    cert = linquot.verify_order(I, [(0, 1, 0, 1), (1, 1, 0, 0), (1, 0, 1, 0)])
    assert isinstance(cert, linquot.LinearQuotientCertificate)


def test_criterion_4_localization_example():
    I = P("x1^2, x1*x2")
    IP, _ = localize(I, [0])
    lhs = hs_oracle(IP, 1)
    rhs, _ = localize(hs_oracle(I, 1), [0])
    assert lhs.is_zero()
    assert rhs == P("x1^2")
    assert is_subideal(lhs, rhs)


def test_criterion_5_general_properties_both_characteristics(report):
    for r in _clean(report, GENERAL, (0, 2)):
        assert r.instances >= 200
        assert r.undecided == 0
    assert report.get("lq_iterated_shift", 0).passed > 0 and report.get("lq_iterated_shift", 2).passed > 0


def test_criterion_6_bounded_borel(report):
    for r in _clean(report, BOREL):
        assert r.instances >= 200
        assert r.undecided == 0
    assert report.get("bounded_borel_shifts_lq").passed == report.get("bounded_borel_shifts_lq").instances


def test_criterion_7_veronese_type(report):
    supp = report.get("veronese_shifts")
    expected = sum(1 for n in range(1, 5) for c in product(range(4), repeat=n)
                   for d in range(1, 5) if sum(c) >= d)
    assert supp.instances == expected and supp.failed == 0
    assert report.get("strong_exchange_support").failed == 0
    assert borel.is_polymatroidal(NON_STRONG_POLYMATROIDAL)
    assert not borel.satisfies_strong_exchange(NON_STRONG_POLYMATROIDAL)
    assert not borel.is_polymatroidal(borel.support_restriction(NON_STRONG_POLYMATROIDAL, 2))
    for c, n, d in [([1, 1, 1], 3, 2), ([2, 1, 3], 3, 4), ([3, 3], 2, 3)]:
        I = borel.veronese(c, n, d)
        assert borel.satisfies_strong_exchange(I)
        for ell in range(n + 1):
            assert borel.is_polymatroidal(borel.support_restriction(I, ell))


def test_criterion_8_graphs(report):
    for r in _clean(report, GRAPHS):
        assert r.undecided == 0
    assert report.get("chordal_complement").instances == 100
    assert report.get("vertex_splittable").instances == 100
    assert report.get("interval").instances == 50
    assert report.get("path_vanishing").instances == report.get("path_projdim").instances == 5


def _ideals_of(name, inst, p):
    """Every ideal an instance of the given property feeds to the oracle."""
    if name == "product":
        I0, J0 = ideal_from_dict(inst["left"]), ideal_from_dict(inst["right"])
        n = I0.nvars + J0.nvars
        yield ideal_product(embed(I0, n), embed(J0, n, I0.nvars))
    elif name == "restriction":
        I = ideal_from_dict(inst["ideal"])
        yield I
        yield restrict(I, inst["bound"])
    elif "ideal" in inst:
        yield ideal_from_dict(inst["ideal"])
    elif name in ("bounded_borel_principal", "bounded_borel_shifts_lq"):
        I = borel.c_bounded_borel_closure([tuple(inst["u"])], inst["bound"])
        yield I
        yield from hs_all(I, p)
    elif name == "veronese_shifts":
        yield borel.veronese(inst["c"], len(inst["c"]), inst["d"])
    elif name in ("chordal_complement", "vertex_splittable"):
        g = inst["graph"]
        G = graphs.Graph.from_edges(g["n"], [(i - 1, j - 1) for i, j in g["edges"]])
        I = graphs.edge_ideal(graphs.complement(G))
        yield I
        yield from hs_all(I, p)
    elif name in ("path_vanishing", "path_projdim"):
        n = inst["n"]
        for k in range(n - 2):
            yield graphs.hs_path_complement(n, k)
    elif name == "interval":
        cliques = [[v - 1 for v in L] for L in inst["cliques"]]
        yield graphs.edge_ideal(graphs.complement(graphs.interval_graph(inst["n"], cliques)))


def test_criterion_9_oracle_self_consistency(report):
    certified = 0
    for names, fields in [(GENERAL, (0, 2)), (BOREL + VERONESE + GRAPHS, (0,))]:
        for name in names:
            prop = REGISTRY[name]
            for p in fields:
                rng = random.Random(f"{SEED}:{name}:{p}")
                for inst in prop.generate(rng, CAPS):
                    for I in _ideals_of(name, inst, p):
                        if not I.is_proper_nonzero():
                            continue
                        ok, problem = sets_agree(I, p)
                        assert problem is None, (name, inst, problem)
                        certified += ok
    assert certified > 1000
    stable = run_suite(SEED, CAPS, names=["stable_shifts"]).get("stable_shifts")
    assert stable.instances == 100 and stable.failed == 0


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
