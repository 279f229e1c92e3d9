"""Seeded randomized property suite.

Every property is a pair (instance generator, check). Instances are plain
JSON-serializable dicts so a failing instance can be replayed with
``homshift check <property> '<json>'``. Results are deterministic in the
seed: each (property, field) pair draws from its own RNG stream.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Callable

from . import borel, graphs, linquot
from .io import ideal_from_dict, ideal_to_dict
from .monomial import (
    MonomialIdeal,
    contains,
    depolarize,
    divides,
    embed,
    height,
    ideal_product,
    ideal_sum,
    is_subideal,
    localize,
    minimalize,
    mul,
    polarize,
    restrict,
    socle_generators,
    squarefree,
    times_monomial,
)
from .oracle import (
    betti_table,
    euler_characteristic,
    has_linear_resolution,
    hs_all,
    hs_oracle,
    projdim,
    reduced_homology,
    upper_koszul,
)

PASS, FAIL, UNDECIDED, SKIP = "pass", "fail", "undecided", "skip"


@dataclass
class Outcome:
    status: str
    detail: str = ""
    certified: bool = False


@dataclass(frozen=True)
class Caps:
    max_vars: int = 4
    max_gens: int = 5
    max_deg: int = 3
    instances: int = 200


@dataclass(frozen=True)
class Property:
    name: str
    generate: Callable[[random.Random, Caps], list[dict]]
    check: Callable[[dict, int], Outcome]
    fields: tuple[int, ...] = (0,)
    group: str = ""


# -- instance helpers -----------------------------------------------------------


def random_monomial(rng: random.Random, n: int, deg: int) -> tuple[int, ...]:
    e = [0] * n
    for _ in range(deg):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_ideal(rng: random.Random, n: int, max_gens: int, max_deg: int) -> MonomialIdeal:
    """Random minimal generating set of a target size in 1..max_gens.

    Candidates that divide or are divided by an accepted generator are
    rejected, so the size survives minimalization whenever the degree cap
    leaves room. Linear generators would swallow most others and are rare.
    """
    m = rng.randint(1, max_gens)
    low = 2 if max_deg >= 2 else 1
    gens: list[tuple[int, ...]] = []
    for _ in range(20 * m):
        if len(gens) == m:
            break
        d = 1 if rng.random() < 0.05 else rng.randint(low, max_deg)
        u = random_monomial(rng, n, d)
        if not any(divides(g, u) or divides(u, g) for g in gens):
            gens.append(u)
    return minimalize(gens, n)


def _ideal(inst: dict, key: str = "ideal") -> MonomialIdeal:
    return ideal_from_dict(inst[key])


def _graph(inst: dict, key: str = "graph") -> graphs.Graph:
    g = inst[key]
    return graphs.Graph.from_edges(g["n"], [(i - 1, j - 1) for i, j in g["edges"]])


def graph_to_dict(G: graphs.Graph) -> dict:
    return {"n": G.n, "edges": [[i + 1, j + 1] for i, j in sorted(G.edges)]}


def _fail(msg: str, *parts) -> Outcome:
    return Outcome(FAIL, msg + "".join(f" {p}" for p in parts))


def _ideal_instances(rng: random.Random, caps: Caps, **extra) -> list[dict]:
    out = []
    for _ in range(caps.instances):
        n = rng.randint(min(2, caps.max_vars), caps.max_vars)
        I = random_ideal(rng, n, caps.max_gens, caps.max_deg)
        inst = {"ideal": ideal_to_dict(I)}
        for k, f in extra.items():
            inst[k] = f(rng, I)
        out.append(inst)
    return out


def sets_agree(I: MonomialIdeal, field_char: int) -> tuple[bool, str | None]:
    """Search a linear quotient certificate; if one exists compare the set(u)
    formula with the oracle in every homological degree."""
    cert = linquot.find_linear_quotient_order(I)
    if not cert:
        return False, None
    top = projdim(I, field_char) + 1 if I.is_proper_nonzero() else 1
    for j in range(top + 1):
        a, b = linquot.hs_via_sets(cert, j), hs_oracle(I, j, field_char)
        if a != b:
            return True, f"set formula gives {a} but oracle gives {b} for HS_{j} of {I}"
    return True, None


def _with_sets(outcome: Outcome, I: MonomialIdeal, field_char: int) -> Outcome:
    if outcome.status != PASS:
        return outcome
    certified, problem = sets_agree(I, field_char)
    if problem:
        return Outcome(FAIL, problem, certified)
    outcome.certified = certified
    return outcome


# -- general properties ---------------------------------------------------------


def check_shift_nested(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    shifts = hs_all(I, p)
    for j in range(len(shifts) - 1):
        for g in shifts[j + 1].gens:
            if not any(divides(h, g) and h != g for h in shifts[j].gens):
                return _fail("generator", g, f"of HS_{j + 1} is not in m*HS_{j} for", I)
    return _with_sets(Outcome(PASS), I, p)


def check_height_decreasing(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    shifts = [H for H in hs_all(I, p) if H.is_proper_nonzero()]
    hs = [height(H) for H in shifts]
    for j in range(len(hs) - 1):
        if hs[j + 1] > hs[j]:
            return _fail(f"height(HS_{j + 1}) = {hs[j + 1]} > height(HS_{j}) = {hs[j]} for", I)
    return _with_sets(Outcome(PASS), I, p)


def _random_bound(rng: random.Random, I: MonomialIdeal):
    top = I.max_exponents()
    return [None if rng.random() < 0.2 else rng.randint(0, t + 1) for t in top]


def check_restriction(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    c = inst["bound"]
    Ic = restrict(I, c)
    for j in range(len(hs_all(I, p)) + 1):
        lhs, rhs = hs_oracle(Ic, j, p), restrict(hs_oracle(I, j, p), c)
        if lhs != rhs:
            return _fail(f"HS_{j}(I^<=c) = {lhs} but HS_{j}(I)^<=c = {rhs} for", I, c)
    return _with_sets(Outcome(PASS), I, p)


def _random_vars(rng: random.Random, I: MonomialIdeal):
    k = rng.randint(1, I.nvars)
    return sorted(i + 1 for i in rng.sample(range(I.nvars), k))


def check_localization(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    P = [i - 1 for i in inst["vars"]]
    IP, _ = localize(I, P)
    for j in range(len(hs_all(I, p)) + 1):
        lhs = hs_oracle(IP, j, p)
        rhs, _ = localize(hs_oracle(I, j, p), P) if hs_oracle(I, j, p).gens else (MonomialIdeal.zero(len(P)), None)
        if not is_subideal(lhs, rhs):
            return _fail(f"HS_{j}(I(P)) = {lhs} not inside HS_{j}(I)(P) = {rhs} for", I, inst["vars"])
    return _with_sets(Outcome(PASS), I, p)


def check_polarization(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    bounds = I.max_exponents()
    Ip, layout = polarize(I, bounds)
    if depolarize(Ip, layout, I.nvars) != I or not Ip.is_squarefree():
        return _fail("polarization does not round-trip for", I)
    for j in range(len(hs_all(I, p)) + 1):
        lhs = hs_oracle(Ip, j, p)
        rhs, _ = polarize(hs_oracle(I, j, p), bounds)
        if lhs != rhs:
            return _fail(f"HS_{j}(I^pol) = {lhs} but HS_{j}(I)^pol = {rhs} for", I)
    return _with_sets(Outcome(PASS), I, p)


def _product_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for _ in range(caps.instances):
        n = rng.randint(2, max(2, caps.max_vars))
        k = rng.randint(1, n - 1)
        I = random_ideal(rng, k, max(1, caps.max_gens // 2), caps.max_deg)
        J = random_ideal(rng, n - k, max(1, caps.max_gens // 2), caps.max_deg)
        out.append({"left": ideal_to_dict(I), "right": ideal_to_dict(J)})
    return out


def check_product(inst: dict, p: int) -> Outcome:
    I0, J0 = _ideal(inst, "left"), _ideal(inst, "right")
    n = I0.nvars + J0.nvars
    I, J = embed(I0, n), embed(J0, n, I0.nvars)
    HI = [embed(H, n) for H in hs_all(I0, p)]
    HJ = [embed(H, n, I0.nvars) for H in hs_all(J0, p)]
    IJ = ideal_product(I, J)
    for i in range(len(HI) + len(HJ) + 1):
        rhs = MonomialIdeal.zero(n)
        for k in range(len(HI)):
            l = i - k
            if 0 <= l < len(HJ):
                rhs = ideal_sum(rhs, ideal_product(HI[k], HJ[l]))
        lhs = hs_oracle(IJ, i, p)
        if lhs != rhs:
            return _fail(f"HS_{i}(IJ) = {lhs} but the sum formula gives {rhs} for", I0, J0)
    return _with_sets(Outcome(PASS), IJ, p)


def check_last_shift(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    n = I.nvars
    top = squarefree(range(n), n)
    socle = socle_generators(I)
    expected = minimalize([mul(top, u) for u in socle], n)
    got = hs_oracle(I, n - 1, p)
    if got != expected:
        return _fail(f"HS_{n - 1} = {got} but x1..xn * socle = {expected} for", I)
    # independent route to the socle: monomials of (I : m) outside I
    from .monomial import box, colon_maximal

    Q = colon_maximal(I)
    top_exp = I.max_exponents()
    brute = sorted((tuple(u) for u in box(top_exp) if contains(Q, tuple(u)) and not contains(I, tuple(u))), reverse=True)
    if brute != socle:
        return _fail(f"socle search {socle} disagrees with (I:m) \\ I = {brute} for", I)
    return _with_sets(Outcome(PASS), I, p)


def check_iterated_shift(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    cert = linquot.find_linear_quotient_order(I)
    if cert is linquot.UNDECIDED:
        return Outcome(UNDECIDED, "certificate search hit its cap")
    if cert is None:
        return Outcome(SKIP, "no linear quotient order")
    shifts = hs_all(I, p)
    for j in range(len(shifts) - 1):
        outer = hs_oracle(shifts[j], 1, p)
        if not is_subideal(shifts[j + 1], outer):
            return _fail(f"HS_{j + 1} = {shifts[j + 1]} not inside HS_1(HS_{j}) = {outer} for", I)
    return _with_sets(Outcome(PASS), I, p)


def _iterated_shift_instances(rng: random.Random, caps: Caps) -> list[dict]:
    # Half random, half stable closures (which always have linear quotients).
    out = _ideal_instances(rng, Caps(caps.max_vars, caps.max_gens, caps.max_deg, caps.instances // 2))
    while len(out) < caps.instances:
        n = rng.randint(1, caps.max_vars)
        seeds = [random_monomial(rng, n, rng.randint(1, caps.max_deg)) for _ in range(rng.randint(1, 2))]
        I = borel.stable_closure(seeds, n)
        if len(I) <= max(caps.max_gens, 12):
            out.append({"ideal": ideal_to_dict(I)})
    return out


# -- oracle internals ----------------------------------------------------------


def check_hs0(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    if hs_oracle(I, 0, p) != I:
        return _fail("HS_0(I) != I for", I)
    table = betti_table(I, p)
    if sorted(table.row(0)) != sorted(I.gens) or set(table.row(0).values()) != {1}:
        return _fail("row 0 of the Betti table is not G(I) for", I)
    return Outcome(PASS)


def check_euler(inst: dict, p: int) -> Outcome:
    """Euler characteristic of each K^a equals the alternating homology sum,
    and the fast kernel agrees with homology of the explicit complex."""
    from .monomial import lcm_lattice

    I = _ideal(inst)
    table = betti_table(I, p)
    for a in lcm_lattice(I):
        K = upper_koszul(I, a)
        h = reduced_homology(K, p)
        if euler_characteristic(K) != sum((-1) ** k * v for k, v in h.items()):
            return _fail("Euler characteristic mismatch at", a, "for", I)
        for k, v in h.items():
            if table.entries.get((k + 1, a), 0) != v:
                return _fail("fast kernel disagrees with explicit K^a at", a, "for", I)
    return Outcome(PASS)


def check_lattice_support(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    if betti_table(I, p).entries != betti_table(I, p, full_box=True).entries:
        return _fail("a Betti number lies outside the lcm lattice for", I)
    return Outcome(PASS)


def _ci_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for _ in range(caps.instances):
        n = rng.randint(1, caps.max_vars)
        blocks = list(range(n))
        rng.shuffle(blocks)
        m = rng.randint(1, n)
        cuts = sorted(rng.sample(range(1, n), m - 1)) if m > 1 else []
        parts = [blocks[a:b] for a, b in zip([0] + cuts, cuts + [n])]
        gens = []
        for part in parts:
            e = [0] * n
            for i in part:
                if rng.random() < 0.7 or not any(e):
                    e[i] = rng.randint(1, caps.max_deg)
            gens.append(e)
        out.append({"ideal": ideal_to_dict(minimalize(gens, n))})
    return out


def check_ci(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    gens = I.gens
    for j in range(len(gens) + 1):
        expected = minimalize([tuple(map(sum, zip(*S))) for S in combinations(gens, j + 1)], I.nvars)
        got = hs_oracle(I, j, p)
        if got != expected:
            return _fail(f"HS_{j} = {got} but the (j+1)-fold products give {expected} for", I)
    return _with_sets(Outcome(PASS), I, p)


def _equigenerated_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for _ in range(caps.instances):
        n = rng.randint(2, caps.max_vars)
        d = rng.randint(1, min(3, caps.max_deg))
        gens = {random_monomial(rng, n, d) for _ in range(rng.randint(1, min(6, caps.max_gens)))}
        out.append({"ideal": ideal_to_dict(minimalize(gens, n))})
    return out


def check_prefix_resolution(inst: dict, p: int) -> Outcome:
    """Linear quotients in a given order iff all prefix ideals have linear resolution,
    checked over every order of G(I)."""
    from itertools import permutations

    I = _ideal(inst)
    for order in permutations(I.gens):
        lq = isinstance(linquot.verify_order(I, order), linquot.LinearQuotientCertificate)
        lr = all(has_linear_resolution(minimalize(order[: j + 1], I.nvars), p) for j in range(len(order)))
        if lq != lr:
            return _fail(f"order {order}: linear quotients {lq} but prefix linear resolutions {lr} for", I)
    return Outcome(PASS)


def check_lq_restriction(inst: dict, p: int) -> Outcome:
    """Restriction keeps linear resolution and linear quotients."""
    I = _ideal(inst)
    c = inst["bound"]
    Ic = restrict(I, c)
    if not Ic.is_proper_nonzero():
        return Outcome(SKIP, "restriction is zero")
    if has_linear_resolution(I, p) and not has_linear_resolution(Ic, p):
        return _fail("restriction lost linear resolution for", I, c)
    cert = linquot.find_linear_quotient_order(I)
    if cert:
        rc = linquot.find_linear_quotient_order(Ic)
        if rc is linquot.UNDECIDED:
            return Outcome(UNDECIDED)
        if rc is None:
            return _fail("restriction lost linear quotients for", I, c)
    return _with_sets(Outcome(PASS), I, p)


def _borel_equigenerated_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for _ in range(caps.instances):
        n = rng.randint(2, caps.max_vars)
        d = rng.randint(1, caps.max_deg)
        u = random_monomial(rng, n, d)
        I = borel.borel_closure([u], n)
        out.append({"ideal": ideal_to_dict(I), "bound": _random_bound(rng, I)})
    return out


# -- c-bounded Borel ideals -------------------------------------------------


def _principal_borel_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for _ in range(caps.instances):
        n = rng.randint(1, caps.max_vars)
        u = random_monomial(rng, n, rng.randint(1, caps.max_deg))
        c = [a + rng.randint(0, 2) for a in u]
        out.append({"u": list(u), "bound": c})
    return out


def check_principal_bound(inst: dict, p: int) -> Outcome:
    u, c = tuple(inst["u"]), inst["bound"]
    lhs = borel.c_bounded_borel_closure([u], c)
    rhs = restrict(borel.borel_closure([u], len(u)), c)
    if lhs != rhs:
        return _fail(f"B^c(u) = {lhs} but B(u)^<=c = {rhs} for u =", u, "c =", c)
    if not borel.is_c_bounded_strongly_stable(lhs, c):
        return _fail("B^c(u) is not c-bounded strongly stable for u =", u, "c =", c)
    return Outcome(PASS)


def check_bounded_borel_shifts(inst: dict, p: int) -> Outcome:
    u, c = tuple(inst["u"]), inst["bound"]
    I = borel.c_bounded_borel_closure([u], c)
    certified = False
    for j, H in enumerate(hs_all(I, p)):
        cert = linquot.find_linear_quotient_order(H)
        if cert is linquot.UNDECIDED:
            return Outcome(UNDECIDED, f"HS_{j} of B^c({u}) undecided")
        if cert is None:
            return _fail(f"HS_{j} = {H} has no linear quotient order for u =", u, "c =", c)
        certified = True
        for k in range(projdim(H, p) + 2):
            if linquot.hs_via_sets(cert, k) != hs_oracle(H, k, p):
                return _fail(f"set formula disagrees with the oracle on HS_{k}(HS_{j}) for u =", u, "c =", c)
    return Outcome(PASS, certified=certified)


def _borel_order_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for _ in range(caps.instances):
        n = rng.randint(1, caps.max_vars)
        d = rng.randint(1, caps.max_deg)
        out.append({"u": list(random_monomial(rng, n, d)), "v": list(random_monomial(rng, n, d))})
    return out


def check_borel_order(inst: dict, p: int) -> Outcome:
    u, v = tuple(inst["u"]), tuple(inst["v"])
    if borel.borel_order_leq(v, u) != contains(borel.borel_closure([u], len(u)), v):
        return _fail("comparison criterion disagrees with closure membership for", u, v)
    return Outcome(PASS)


# -- Veronese type ideals ------------------------------------------------------


def _veronese_instances(rng: random.Random, caps: Caps) -> list[dict]:
    """Every c in {0..3}^n, n <= min(4, max_vars), d <= 4 with a nonzero ideal."""
    out = []
    for n in range(1, min(4, caps.max_vars) + 1):
        for c in product(range(4), repeat=n):
            for d in range(1, 5):
                if sum(c) >= d:
                    out.append({"c": list(c), "d": d})
    return out


def check_veronese_shifts(inst: dict, p: int) -> Outcome:
    c, d = inst["c"], inst["d"]
    n = len(c)
    I = borel.veronese(c, n, d)
    for ell in range(n + 1):
        closed = borel.hs_veronese(c, n, d, ell)
        got = hs_oracle(I, ell, p)
        if closed != got:
            return _fail(f"HS_{ell} closed form {closed} != oracle {got} for c =", c, "d =", d)
        if not borel.is_polymatroidal(got):
            return _fail(f"HS_{ell} is not polymatroidal for c =", c, "d =", d)
    return Outcome(PASS)


def check_veronese_borel(inst: dict, p: int) -> Outcome:
    c, d = inst["c"], inst["d"]
    n = len(c)
    u = borel.veronese_principal_generator(c, n, d)
    if borel.c_bounded_borel_closure([u], c) != borel.veronese(c, n, d):
        return _fail("B^c(u) differs from the Veronese type ideal for c =", c, "d =", d, "u =", u)
    return Outcome(PASS)


# Polymatroidal without strong exchange; its I_>2 is not polymatroidal.
NON_STRONG_POLYMATROIDAL = minimalize([(1, 1, 1, 1), (0, 2, 0, 2), (0, 1, 1, 2), (1, 2, 0, 1)], 4)


def _strong_exchange_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for inst in _veronese_instances(rng, caps):
        n = len(inst["c"])
        I = borel.veronese(inst["c"], n, inst["d"])
        m = random_monomial(rng, n, rng.randint(0, 2))
        out.append({"ideal": ideal_to_dict(times_monomial(I, m))})
    for inst in _equigenerated_instances(rng, caps):
        out.append(inst)
    out.append({"ideal": ideal_to_dict(NON_STRONG_POLYMATROIDAL)})
    return out


def check_strong_exchange_support(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    if not I.is_equigenerated() or not borel.satisfies_strong_exchange(I):
        return Outcome(SKIP, "no strong exchange")
    for ell in range(I.nvars + 1):
        if not borel.is_polymatroidal(borel.support_restriction(I, ell)):
            return _fail(f"I_>{ell} is not polymatroidal for", I)
    return Outcome(PASS)


def _strong_multiple_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    insts = _veronese_instances(rng, caps)
    for _ in range(min(caps.instances, len(insts))):
        inst = dict(rng.choice(insts))
        inst["m"] = list(random_monomial(rng, len(inst["c"]), rng.randint(0, 3)))
        out.append(inst)
    return out


def check_strong_multiple(inst: dict, p: int) -> Outcome:
    c, d, m = inst["c"], inst["d"], tuple(inst["m"])
    n = len(c)
    I = borel.veronese(c, n, d)
    mI = times_monomial(I, m)
    if not borel.satisfies_strong_exchange(mI):
        return _fail("m * I_{c,n,d} lost the strong exchange property for", c, d, m)
    for j in range(n + 1):
        lhs, rhs = hs_oracle(mI, j, p), times_monomial(hs_oracle(I, j, p), m)
        if lhs != rhs:
            return _fail(f"HS_{j}(mI) = {lhs} but m*HS_{j}(I) = {rhs} for", c, d, m)
        if not borel.is_polymatroidal(lhs):
            return _fail(f"HS_{j}(mI) is not polymatroidal for", c, d, m)
    return Outcome(PASS)


# -- graphs ----------------------------------------------------------------


def random_chordal_graph(rng: random.Random, n: int) -> graphs.Graph:
    """Chordal graph built backwards along a PEO, then randomly relabeled."""
    edges = set()
    adj: dict[int, set[int]] = {n - 1: set()}
    for v in range(n - 2, -1, -1):
        later = list(range(v + 1, n))
        clique: set[int] = set()
        if rng.random() < 0.85:
            w = rng.choice(later)
            clique = {w}
            for x in rng.sample(later, len(later)):
                if x not in clique and all(x in adj[y] for y in clique) and rng.random() < 0.6:
                    clique.add(x)
        adj[v] = set(clique)
        for x in clique:
            adj[x].add(v)
            edges.add((v, x))
    perm = list(range(n))
    rng.shuffle(perm)
    return graphs.Graph.from_edges(n, edges).relabel(perm)


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> graphs.Graph:
    return graphs.Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < density])


def _chordal_instances(rng: random.Random, caps: Caps, count: int = 100, lo: int = 2, hi: int = 7) -> list[dict]:
    return [{"graph": graph_to_dict(random_chordal_graph(rng, rng.randint(lo, hi)))} for _ in range(count)]


def check_chordal_complement(inst: dict, p: int) -> Outcome:
    G = _graph(inst)
    peo = graphs.chordal_peo(G)
    if peo is None:
        return _fail("generated graph is not chordal:", inst["graph"])
    I = graphs.edge_ideal(graphs.complement(G))
    if I.is_zero():
        return Outcome(PASS)
    for k in range(G.n):
        a, b = graphs.hs_chordal_complement(G, peo, k), hs_oracle(I, k, p)
        if a != b:
            return _fail(f"chordal formula {a} != oracle {b} for k={k}, graph", inst["graph"])
    # set(x_i x_j) formula against the certificate of the lex order in PEO labels
    H = G.relabel(graphs.peo_relabeling(peo))
    IH = graphs.edge_ideal(graphs.complement(H))
    cert = linquot.verify_order(IH, IH.gens)
    if not isinstance(cert, linquot.LinearQuotientCertificate):
        return _fail("lex order of I(G^c) is not a linear quotient order for", inst["graph"])
    for u, s in zip(cert.order, cert.sets):
        i, j = [t for t, a in enumerate(u) if a]
        if graphs.set_formula_complement(H, i, j) != s:
            return _fail("set formula disagrees with the certificate at", u, "for", inst["graph"])
    return _with_sets(Outcome(PASS), I, p)


def check_vertex_splittable(inst: dict, p: int) -> Outcome:
    G = _graph(inst)
    I = graphs.edge_ideal(graphs.complement(G))
    H1 = hs_oracle(I, 1, p)
    tree = linquot.is_vertex_splittable(H1)
    if tree is linquot.UNDECIDED:
        return Outcome(UNDECIDED, "vertex splitting search hit its cap")
    if tree is None:
        return _fail(f"HS_1(I(G^c)) = {H1} is not vertex splittable for", inst["graph"])
    cert = linquot.find_linear_quotient_order(H1)
    if cert is None:
        return _fail("vertex splittable but no linear quotient order for", inst["graph"])
    if cert is linquot.UNDECIDED:
        return Outcome(UNDECIDED)
    if H1.gens and not isinstance(linquot.verify_order(H1, linquot.tree_order(tree)), linquot.LinearQuotientCertificate):
        return _fail("splitting order is not a linear quotient order for", inst["graph"])
    return _with_sets(Outcome(PASS), H1, p)


def _froberg_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for t in range(caps.instances):
        n = rng.randint(2, 6)
        G = random_chordal_graph(rng, n) if t % 2 else random_graph(rng, n, rng.choice([0.4, 0.6, 0.8]))
        out.append({"graph": graph_to_dict(G)})
    return out


def check_froberg(inst: dict, p: int) -> Outcome:
    G = _graph(inst)
    I = graphs.edge_ideal(graphs.complement(G))
    if I.is_zero():
        return Outcome(SKIP, "G is complete")
    if has_linear_resolution(I, p) != graphs.is_chordal(G):
        return _fail("linear resolution of I(G^c) does not match chordality of", inst["graph"])
    return Outcome(PASS)


def _whisker_instances(rng: random.Random, caps: Caps) -> list[dict]:
    return [{"graph": graph_to_dict(random_graph(rng, rng.randint(1, 4)))} for _ in range(min(caps.instances, 60))]


def check_whisker(inst: dict, p: int) -> Outcome:
    G = _graph(inst)
    a = graphs.hs_whisker_top(G)
    b = hs_oracle(graphs.edge_ideal(graphs.whisker(G)), G.n - 1, p)
    if a != b:
        return _fail(f"whisker formula {a} != oracle {b} for", inst["graph"])
    return Outcome(PASS)


def _path_instances(rng: random.Random, caps: Caps) -> list[dict]:
    return [{"n": n} for n in range(4, 9)]


def check_path_vanishing(inst: dict, p: int) -> Outcome:
    n = inst["n"]
    P = graphs.path_graph(n)
    I = graphs.edge_ideal(graphs.complement(P))
    for k in range(0, n + 1):
        H = graphs.hs_path_complement(n, k)
        if H != graphs.hs_chordal_complement(P, range(n), k):
            return _fail(f"path formula disagrees with the chordal formula at n={n}, k={k}")
        if H != hs_oracle(I, k, p):
            return _fail(f"path formula disagrees with the oracle at n={n}, k={k}")
        if k >= 1 and (not H.is_zero()) != (k <= n - 3):
            return _fail(f"HS_{k} nonzero is {not H.is_zero()} at n={n}")
    return Outcome(PASS)


def check_path_projdim(inst: dict, p: int) -> Outcome:
    n = inst["n"]
    dims = []
    for k in range(1, n - 2):
        H = graphs.hs_path_complement(n, k)
        cert = linquot.verify_order(H, H.gens)
        if not isinstance(cert, linquot.LinearQuotientCertificate):
            return _fail(f"lex order fails for HS_{k}(I(P_{n}^c)) at position", cert.position)
        if not linquot.find_linear_quotient_order(H):
            return _fail(f"certificate search fails for HS_{k}(I(P_{n}^c))")
        pd_sets = linquot.projdim_via_sets(cert)
        pd_oracle = projdim(H, p)
        if not (pd_sets == pd_oracle == n - k - 2):
            return _fail(f"projdim HS_{k}: sets {pd_sets}, oracle {pd_oracle}, expected {n - k - 2} (n={n})")
        for j in range(pd_oracle + 2):
            if linquot.hs_via_sets(cert, j) != hs_oracle(H, j, p):
                return _fail(f"set formula disagrees with the oracle on HS_{j}(HS_{k}) n={n}")
        dims.append(pd_oracle)
    if any(b >= a for a, b in zip(dims, dims[1:])):
        return _fail(f"projdims {dims} are not strictly decreasing for n={n}")
    return Outcome(PASS, certified=bool(dims))


def check_chordal_shifts_lq(inst: dict, p: int) -> Outcome:
    """Empirical only: do all HS_k(I(G^c)) have linear quotients? Never fails;
    uncertified or undecided shift ideals are reported as skipped."""
    G = _graph(inst)
    I = graphs.edge_ideal(graphs.complement(G))
    for H in hs_all(I, p):
        cert = linquot.find_linear_quotient_order(H)
        if not cert:
            return Outcome(SKIP, f"no certificate found for {H}")
        if linquot.hs_via_sets(cert, 1) != hs_oracle(H, 1, p):
            return _fail("set formula disagrees with the oracle on", H)
    return Outcome(PASS, certified=bool(I.gens))


def random_interval_cliques(rng: random.Random, n: int) -> list[list[int]]:
    """Consecutive runs [a_r, b_r] with strictly increasing ends covering 1..n."""
    while True:
        runs = []
        a, b = 1, rng.randint(1, n - 1)
        runs.append((a, b))
        while b < n:
            na = rng.randint(a + 1, b + 1)
            nb = rng.randint(max(b + 1, na), n)
            runs.append((na, nb))
            a, b = na, nb
        if len(runs) >= 2:
            return [list(range(x, y + 1)) for x, y in runs]


def _interval_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    for _ in range(50):
        n = rng.randint(3, 8)
        out.append({"n": n, "cliques": random_interval_cliques(rng, n)})
    return out


def check_interval(inst: dict, p: int) -> Outcome:
    n = inst["n"]
    cliques = [[v - 1 for v in L] for L in inst["cliques"]]
    bounds = graphs.interval_bounds(n, cliques)
    G = graphs.interval_graph(n, cliques)
    I = graphs.edge_ideal(graphs.complement(G))
    for k in range(n):
        nonzero = not hs_oracle(I, k, p).is_zero()
        if nonzero != (k <= bounds.max_nonzero_k):
            return _fail(f"HS_{k} nonzero is {nonzero}, threshold {bounds.max_nonzero_k}, for", inst)
    if projdim(I, p) != bounds.projdim:
        return _fail(f"projdim {projdim(I, p)} != n - s - 2 = {bounds.projdim} for", inst)
    return Outcome(PASS)


# -- stable ideals -------------------------------------------------------


def _stable_instances(rng: random.Random, caps: Caps) -> list[dict]:
    out = []
    while len(out) < 100:
        n = rng.randint(1, caps.max_vars)
        seeds = [random_monomial(rng, n, rng.randint(1, caps.max_deg)) for _ in range(rng.randint(1, 3))]
        I = borel.stable_closure(seeds, n)
        out.append({"ideal": ideal_to_dict(I)})
    return out


def check_stable_shifts(inst: dict, p: int) -> Outcome:
    I = _ideal(inst)
    if not linquot.is_stable(I):
        return _fail("generated ideal is not stable:", I)
    for j in range(I.nvars + 1):
        a, b = linquot.hs_stable(I, j), hs_oracle(I, j, p)
        if a != b:
            return _fail(f"Eliahou-Kervaire {a} != oracle {b} at j={j} for", I)
    return _with_sets(Outcome(PASS), I, p)


def _both(rng, caps):
    return _ideal_instances(rng, caps)


REGISTRY: dict[str, Property] = {
    p.name: p
    for p in [
        Property("shift_nested", _both, check_shift_nested, (0, 2), "general"),
        Property("height_decreasing", _both, check_height_decreasing, (0, 2), "general"),
        Property("restriction", lambda r, c: _ideal_instances(r, c, bound=_random_bound), check_restriction, (0, 2), "general"),
        Property("localization", lambda r, c: _ideal_instances(r, c, vars=_random_vars), check_localization, (0, 2), "general"),
        Property("polarization", _both, check_polarization, (0, 2), "general"),
        Property("product", _product_instances, check_product, (0, 2), "general"),
        Property("last_shift_socle", _both, check_last_shift, (0, 2), "general"),
        Property("lq_iterated_shift", _iterated_shift_instances, check_iterated_shift, (0, 2), "general"),
        Property("hs0", _both, check_hs0, (0,), "oracle"),
        Property("euler", lambda r, c: _ideal_instances(r, Caps(min(c.max_vars, 4), min(c.max_gens, 5), min(c.max_deg, 3), 50)), check_euler, (0, 2), "oracle"),
        Property("lattice_support", lambda r, c: _ideal_instances(r, Caps(min(c.max_vars, 3), min(c.max_gens, 4), min(c.max_deg, 3), 40)), check_lattice_support, (0,), "oracle"),
        Property("complete_intersection", _ci_instances, check_ci, (0,), "oracle"),
        Property("lq_prefix_resolution", lambda r, c: _equigenerated_instances(r, Caps(c.max_vars, min(c.max_gens, 5), c.max_deg, 60)), check_prefix_resolution, (0,), "linear-quotients"),
        Property("lq_restriction", _borel_equigenerated_instances, check_lq_restriction, (0,), "linear-quotients"),
        Property("bounded_borel_principal", _principal_borel_instances, check_principal_bound, (0,), "borel"),
        Property("bounded_borel_shifts_lq", _principal_borel_instances, check_bounded_borel_shifts, (0,), "borel"),
        Property("borel_order", _borel_order_instances, check_borel_order, (0,), "borel"),
        Property("veronese_shifts", _veronese_instances, check_veronese_shifts, (0,), "veronese"),
        Property("veronese_borel", _veronese_instances, check_veronese_borel, (0,), "veronese"),
        Property("strong_exchange_support", _strong_exchange_instances, check_strong_exchange_support, (0,), "veronese"),
        Property("strong_multiple", _strong_multiple_instances, check_strong_multiple, (0,), "veronese"),
        Property("chordal_complement", _chordal_instances, check_chordal_complement, (0,), "graphs"),
        Property("vertex_splittable", _chordal_instances, check_vertex_splittable, (0,), "graphs"),
        Property("chordal_shifts_lq_empirical", lambda r, c: _chordal_instances(r, c, count=40, hi=6), check_chordal_shifts_lq, (0,), "graphs"),
        Property("froberg", _froberg_instances, check_froberg, (0,), "graphs"),
        Property("whisker", _whisker_instances, check_whisker, (0,), "graphs"),
        Property("path_vanishing", _path_instances, check_path_vanishing, (0,), "graphs"),
        Property("path_projdim", _path_instances, check_path_projdim, (0,), "graphs"),
        Property("interval", _interval_instances, check_interval, (0,), "graphs"),
        Property("stable_shifts", _stable_instances, check_stable_shifts, (0,), "stable"),
    ]
}


# -- runner ------------------------------------------------------------------------------


@dataclass
class PropertyReport:
    name: str
    field: int
    instances: int = 0
    passed: int = 0
    failed: int = 0
    undecided: int = 0
    skipped: int = 0
    certified: int = 0
    first_counterexample: dict | None = None
    seconds: float = 0.0

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        d = {
            "name": self.name,
            "field": self.field,
            "instances": self.instances,
            "pass": self.passed,
            "fail": self.failed,
            "undecided": self.undecided,
            "skipped": self.skipped,
            "certified": self.certified,
            "first_counterexample": self.first_counterexample,
        }
        if timings:
            d["seconds"] = round(self.seconds, 3)
        return d


@dataclass
class SuiteReport:
    seed: int
    caps: Caps
    properties: list[PropertyReport] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return sum(p.failed for p in self.properties)

    @property
    def undecided(self) -> int:
        return sum(p.undecided for p in self.properties)

    def exit_code(self) -> int:
        if self.failed:
            return 1
        if self.undecided:
            return 3
        return 0

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "caps": self.caps.__dict__,
            "properties": [p.to_dict(timings) for p in self.properties],
            "totals": {
                "instances": sum(p.instances for p in self.properties),
                "fail": self.failed,
                "undecided": self.undecided,
            },
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True)

    def get(self, name: str, field_char: int = 0) -> PropertyReport:
        for p in self.properties:
            if p.name == name and p.field == field_char:
                return p
        raise KeyError((name, field_char))


def run_property(prop: Property, field_char: int, seed: int, caps: Caps) -> PropertyReport:
    rng = random.Random(f"{seed}:{prop.name}:{field_char}")
    report = PropertyReport(prop.name, field_char)
    start = time.perf_counter()
    for inst in prop.generate(rng, caps):
        report.instances += 1
        try:
            out = prop.check(inst, field_char)
        except Exception as exc:  # a crash on a valid instance is a failure
            out = Outcome(FAIL, f"{type(exc).__name__}: {exc}")
        if out.status == PASS:
            report.passed += 1
        elif out.status == FAIL:
            report.failed += 1
            if report.first_counterexample is None:
                report.first_counterexample = {"instance": inst, "detail": out.detail}
        elif out.status == UNDECIDED:
            report.undecided += 1
        else:
            report.skipped += 1
        if out.certified:
            report.certified += 1
    report.seconds = time.perf_counter() - start
    return report


def _run_task(args):
    name, field_char, seed, caps = args
    return run_property(REGISTRY[name], field_char, seed, caps)


def default_workers() -> int:
    env = os.environ.get("HOMSHIFT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def run_suite(
    seed: int = 0,
    caps: Caps = Caps(),
    names: list[str] | None = None,
    fields: tuple[int, ...] | None = None,
    registry: dict[str, Property] | None = None,
    workers: int | None = None,
) -> SuiteReport:
    """Run the registered properties; ``fields`` overrides each property's
    default characteristics."""
    registry = REGISTRY if registry is None else registry
    names = sorted(registry) if names is None else sorted(names)
    for n in names:
        if n not in registry:
            raise KeyError(f"unknown property {n!r}")
    tasks = [(n, f) for n in names for f in (fields or registry[n].fields)]
    workers = default_workers() if workers is None else workers
    if workers > 1 and registry is REGISTRY and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_task, [(n, f, seed, caps) for n, f in tasks]))
    else:
        reports = [run_property(registry[n], f, seed, caps) for n, f in tasks]
    reports.sort(key=lambda r: (r.name, r.field))
    return SuiteReport(seed, caps, reports)


def check_instance(name: str, inst: dict, field_char: int = 0) -> Outcome:
    if name not in REGISTRY:
        raise KeyError(f"unknown property {name!r}")
    return REGISTRY[name].check(inst, field_char)
