"""Linear quotients, set(u), and closed formulas for HS_j.

Search results that hit a size cap come back as :data:`UNDECIDED`, never as
a negative answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from .monomial import (
    Monomial,
    MonomialIdeal,
    colon_monomial,
    contains,
    lcm,
    max_index,
    minimalize,
    mul,
    quotient,
    squarefree,
    var,
)


class _Undecided:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNDECIDED"

    def __bool__(self) -> bool:
        return False


UNDECIDED = _Undecided()

DEFAULT_ORDER_CAP = 12
DEFAULT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class LinearQuotientCertificate:
    nvars: int
    order: tuple[Monomial, ...]
    sets: tuple[frozenset[int], ...]

    def ideal(self) -> MonomialIdeal:
        return minimalize(self.order, self.nvars)


@dataclass(frozen=True)
class OrderFailure:
    """The first position (0-based) whose colon is not generated by variables."""

    position: int
    colon: MonomialIdeal


def variable_set(J: MonomialIdeal) -> frozenset[int] | None:
    """Indices i if J = (x_i : i in set), else None. The zero ideal gives the empty set."""
    out = set()
    for g in J.gens:
        if sum(g) != 1:
            return None
        out.add(g.index(1))
    return frozenset(out)


def _prefix_colon(prefix: Sequence[Monomial], u: Monomial, n: int) -> MonomialIdeal:
    return colon_monomial(MonomialIdeal(n, tuple(prefix)), u)


def verify_order(I: MonomialIdeal, order: Sequence[Monomial]) -> LinearQuotientCertificate | OrderFailure:
    order = tuple(tuple(u) for u in order)
    if sorted(order, reverse=True) != list(I.gens):
        raise ValueError("order is not a permutation of the minimal generators")
    n = I.nvars
    sets = []
    for j, u in enumerate(order):
        colon = _prefix_colon(order[:j], u, n)
        s = variable_set(colon)
        if s is None:
            return OrderFailure(j, colon)
        sets.append(s)
    return LinearQuotientCertificate(n, order, tuple(sets))


def find_linear_quotient_order(
    I: MonomialIdeal,
    cap: int = DEFAULT_ORDER_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> LinearQuotientCertificate | None | _Undecided:
    """Backtracking search for a degree-non-decreasing linear quotient order.

    Whether the next generator has a variable-generated colon depends only on
    the set of generators placed so far, so dead sets are memoized. For
    ``len(I) <= cap`` the search runs to completion and ``None`` means no order
    exists. Larger ideals are searched within ``node_budget`` colon checks
    and give UNDECIDED when that runs out without a certificate.
    """
    gens = list(I.gens)
    m = len(gens)
    n = I.nvars
    if m == 0:
        return LinearQuotientCertificate(n, (), ())
    degs = [sum(g) for g in gens]
    exhaustive = m <= cap
    dead: set[int] = set()
    budget = [node_budget]
    colon_cache: dict[tuple[int, int], frozenset[int] | None] = {}

    def colon_set(mask: int, k: int):
        key = (mask, k)
        if key not in colon_cache:
            prefix = [gens[t] for t in range(m) if mask >> t & 1]
            colon_cache[key] = variable_set(_prefix_colon(prefix, gens[k], n))
            budget[0] -= 1
        return colon_cache[key]

    path: list[int] = []
    sets: list[frozenset[int]] = []
    out_of_budget = False

    def extend(mask: int) -> bool:
        nonlocal out_of_budget
        if mask == (1 << m) - 1:
            return True
        if mask in dead:
            return False
        rest = [k for k in range(m) if not mask >> k & 1]
        low = min(degs[k] for k in rest)
        for k in rest:
            if degs[k] != low:
                continue
            if not exhaustive and budget[0] <= 0:
                out_of_budget = True
                return False
            s = colon_set(mask, k)
            if s is None:
                continue
            path.append(k)
            sets.append(s)
            if extend(mask | (1 << k)):
                return True
            path.pop()
            sets.pop()
            if out_of_budget:
                return False
        dead.add(mask)
        return False

    if extend(0):
        return LinearQuotientCertificate(n, tuple(gens[k] for k in path), tuple(sets))
    if out_of_budget or not exhaustive:
        return UNDECIDED
    return None


def has_linear_quotients(I: MonomialIdeal, cap: int = DEFAULT_ORDER_CAP):
    """True/False, or UNDECIDED when the search cap is hit."""
    cert = find_linear_quotient_order(I, cap)
    if cert is UNDECIDED:
        return UNDECIDED
    return cert is not None


def _check_nondecreasing(cert: LinearQuotientCertificate) -> None:
    degs = [sum(u) for u in cert.order]
    if degs != sorted(degs):
        raise ValueError("formula needs generators ordered by non-decreasing degree")


def hs_via_sets(cert: LinearQuotientCertificate, j: int) -> MonomialIdeal:
    """HS_j(I) = (x_F u : u in G(I), F subset of set(u), |F| = j)."""
    _check_nondecreasing(cert)
    n = cert.nvars
    out = []
    for u, s in zip(cert.order, cert.sets):
        for F in combinations(sorted(s), j):
            out.append(mul(u, squarefree(F, n)))
    return minimalize(out, n)


def projdim_via_sets(cert: LinearQuotientCertificate) -> int:
    return max((len(s) for s in cert.sets), default=-1)


def is_stable(I: MonomialIdeal) -> bool:
    """x_i * u / x_{m(u)} in I for every u in G(I) and every i < m(u)."""
    n = I.nvars
    for u in I.gens:
        m = max_index(u)
        for i in range(m):
            if not contains(I, mul(quotient(u, var(m, n)), var(i, n))):
                return False
    return True


def hs_stable(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """Eliahou-Kervaire: HS_j(I) = (x_F u : |F| = j, max(F) < m(u))."""
    if not is_stable(I):
        raise ValueError("ideal is not stable")
    n = I.nvars
    out = []
    for u in I.gens:
        for F in combinations(range(max_index(u)), j):
            out.append(mul(u, squarefree(F, n)))
    return minimalize(out, n)


def hs1_linearly_related(I: MonomialIdeal, field_char: int | None = None) -> MonomialIdeal:
    """HS_1 of an equigenerated, linearly related ideal: all x_i u = x_j v, i != j.

    With ``field_char`` set, the linear-relations hypothesis is checked with
    the oracle first.
    """
    if not I.is_equigenerated():
        raise ValueError("ideal is not generated in a single degree")
    if field_char is not None:
        from .oracle import is_linearly_related

        if I.is_proper_nonzero() and not is_linearly_related(I, field_char):
            raise ValueError("ideal has nonlinear first syzygies")
    out = []
    gens = I.gens
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            w = lcm(gens[a], gens[b])
            if sum(w) == sum(gens[a]) + 1:
                out.append(w)
    return minimalize(out, I.nvars)


# -- vertex splittable ideals -------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    ideal: MonomialIdeal


@dataclass(frozen=True)
class Node:
    variable: int
    left: "VertexSplitTree"  # I_1, with I = x*I_1 + I_2
    right: "VertexSplitTree"  # I_2
    ideal: MonomialIdeal


VertexSplitTree = Union[Leaf, Node]


def split_at(I: MonomialIdeal, x: int) -> tuple[MonomialIdeal, MonomialIdeal] | None:
    """(I_1, I_2) with I = x*I_1 + I_2 as in the definition, or None."""
    n = I.nvars
    left, right = [], []
    for u in I.gens:
        if u[x] == 0:
            right.append(u)
        elif u[x] == 1:
            left.append(quotient(u, var(x, n)))
        else:
            return None
    if not left:
        return None
    I1 = minimalize(left, n)
    I2 = MonomialIdeal(n, tuple(right))
    if len(I1) != len(left):
        return None
    if not all(contains(I1, v) for v in I2.gens):
        return None
    return I1, I2


def is_vertex_splittable(I: MonomialIdeal, max_calls: int = 100_000):
    """A splitting tree, None if the ideal is not vertex splittable, or UNDECIDED."""
    memo: dict[MonomialIdeal, VertexSplitTree | None] = {}
    calls = [0]

    class _Cap(Exception):
        pass

    def search(J: MonomialIdeal) -> VertexSplitTree | None:
        if J.is_zero() or len(J) == 1:
            return Leaf(J)
        if J in memo:
            return memo[J]
        calls[0] += 1
        if calls[0] > max_calls:
            raise _Cap
        result = None
        used = sorted({i for g in J.gens for i, a in enumerate(g) if a})
        for x in used:
            parts = split_at(J, x)
            if parts is None:
                continue
            left = search(parts[0])
            if left is None:
                continue
            right = search(parts[1])
            if right is None:
                continue
            result = Node(x, left, right, J)
            break
        memo[J] = result
        return result

    try:
        return search(I)
    except _Cap:
        return UNDECIDED


def tree_order(tree: VertexSplitTree) -> list[Monomial]:
    """Generators of the root in the order x*G(I_1) then G(I_2) at each split."""
    if isinstance(tree, Leaf):
        return list(tree.ideal.gens)
    n = tree.ideal.nvars
    xv = var(tree.variable, n)
    return [mul(g, xv) for g in tree_order(tree.left)] + tree_order(tree.right)
