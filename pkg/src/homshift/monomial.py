"""Monomials and monomial ideals.

A monomial is a tuple of nonnegative exponents; a ``MonomialIdeal`` holds the
ambient variable count and its minimal generators in descending lex order.
Variables are 0-based internally and rendered as ``x1..xn``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as cartesian
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

# Sentinel for an unbounded coordinate of a bound vector.
UNBOUNDED = None


class AmbientError(ValueError):
    """Raised when monomials or ideals live in different ambient rings."""


def one(n: int) -> Monomial:
    return (0,) * n


def var(i: int, n: int) -> Monomial:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def squarefree(indices: Iterable[int], n: int) -> Monomial:
    e = [0] * n
    for i in indices:
        e[i] = 1
    return tuple(e)


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(u) if a)


def max_index(u: Monomial) -> int:
    """Largest variable index dividing ``u`` (m(u)); -1 for the identity."""
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    return -1


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def quotient(u: Monomial, v: Monomial) -> Monomial:
    """u / v, assuming v divides u."""
    return tuple(a - b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def is_bounded(u: Monomial, bounds: Sequence[int | None]) -> bool:
    return all(c is UNBOUNDED or a <= c for a, c in zip(u, bounds))


def _check_len(u: Monomial, n: int) -> None:
    if len(u) != n:
        raise AmbientError(f"monomial {u} has length {len(u)}, expected {n}")


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # Sorting by degree means a divisor is always seen before its multiples.
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=sum):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    Construct through :func:`minimalize` or :meth:`from_gens`; the raw
    constructor trusts that ``gens`` is already minimal and sorted.
    """

    nvars: int
    gens: tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], nvars: int) -> "MonomialIdeal":
        return minimalize(gens, nvars)

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (one(nvars),))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    def is_equigenerated(self) -> bool:
        return len({sum(g) for g in self.gens}) <= 1

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.gens]

    def max_exponents(self) -> tuple[int, ...]:
        if not self.gens:
            return one(self.nvars)
        return tuple(max(col) for col in zip(*self.gens))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment ``self ⊆ other``."""
        return is_subideal(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_product(self, other)

    def __str__(self) -> str:
        from .io import render_monomial

        return "(" + ", ".join(render_monomial(g) for g in self.gens) + ")"


def minimalize(raw_gens: Iterable[Sequence[int]], nvars: int) -> MonomialIdeal:
    gens = []
    for g in raw_gens:
        g = tuple(int(a) for a in g)
        _check_len(g, nvars)
        if any(a < 0 for a in g):
            raise ValueError(f"negative exponent in {g}")
        gens.append(g)
    return MonomialIdeal(nvars, _minimal(gens))


def _same_ambient(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise AmbientError(f"ambient mismatch: {I.nvars} vs {J.nvars}")


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    _check_len(u, I.nvars)
    return any(divides(g, u) for g in I.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ambient(I, J)
    return all(contains(J, g) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.nvars, _minimal(I.gens + J.gens))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.nvars, _minimal(mul(g, h) for g in I.gens for h in J.gens))


def times_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    _check_len(m, I.nvars)
    return MonomialIdeal(I.nvars, tuple(mul(g, m) for g in I.gens))


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.nvars, _minimal(lcm(g, h) for g in I.gens for h in J.gens))


def colon_monomial(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal I : u."""
    _check_len(u, I.nvars)
    return MonomialIdeal(I.nvars, _minimal(quotient(g, gcd(g, u)) for g in I.gens))


def colon_maximal(I: MonomialIdeal) -> MonomialIdeal:
    """I : m, the intersection of the colons I : x_i."""
    if I.is_zero():
        return I
    result = MonomialIdeal.unit(I.nvars)
    for i in range(I.nvars):
        result = intersection(result, colon_monomial(I, var(i, I.nvars)))
    return result


def box(bounds: Sequence[int]):
    """All exponent vectors e with 0 <= e_i <= bounds[i]."""
    return cartesian(*(range(b + 1) for b in bounds))


def socle_generators(I: MonomialIdeal) -> list[Monomial]:
    """Monomials u not in I with x_i*u in I for every i, in descending lex order.

    These form a K-basis of (I : m)/I. If u_i >= max_i (the largest exponent
    of x_i among the generators) then any generator dividing x_i*u already
    divides u, so every witness lies in the box prod [0, max_i - 1]; if some
    variable never occurs, x_i*u in I forces u in I and the socle is empty.
    """
    if I.is_zero():
        return []
    top = I.max_exponents()
    if any(t == 0 for t in top):
        return []
    n = I.nvars
    found = []
    for u in box([t - 1 for t in top]):
        if contains(I, u):
            continue
        if all(contains(I, mul(u, var(i, n))) for i in range(n)):
            found.append(tuple(u))
    return sorted(found, reverse=True)


def restrict(I: MonomialIdeal, bounds: Sequence[int | None]) -> MonomialIdeal:
    """I^{<=c}: the ideal of c-bounded minimal generators."""
    if len(bounds) != I.nvars:
        raise AmbientError(f"bound vector has length {len(bounds)}, expected {I.nvars}")
    return MonomialIdeal(I.nvars, tuple(g for g in I.gens if is_bounded(g, bounds)))


def localize(I: MonomialIdeal, P: Iterable[int]) -> tuple[MonomialIdeal, dict[int, int]]:
    """Monomial localization I(P): substitute x_i -> 1 for i outside P.

    Returns the ideal in |P| variables and the old -> new index map.
    """
    P = sorted(set(P))
    if not P:
        raise ValueError("localization needs a nonempty set of variables")
    if P[0] < 0 or P[-1] >= I.nvars:
        raise AmbientError(f"variables {P} out of range for {I.nvars} variables")
    index = {old: new for new, old in enumerate(P)}
    gens = (tuple(g[i] for i in P) for g in I.gens)
    return MonomialIdeal(len(P), _minimal(gens)), index


def polarization_layout(bounds: Sequence[int]) -> dict[tuple[int, int], int]:
    """Flat index of the polarized variable x_{i,j}, 0 <= j < bounds[i]."""
    layout = {}
    k = 0
    for i, b in enumerate(bounds):
        for j in range(b):
            layout[(i, j)] = k
            k += 1
    return layout


def polarize_monomial(u: Monomial, layout: dict[tuple[int, int], int]) -> Monomial:
    e = [0] * len(layout)
    for i, a in enumerate(u):
        for j in range(a):
            e[layout[(i, j)]] = 1
    return tuple(e)


def polarize(
    I: MonomialIdeal, bounds: Sequence[int] | None = None
) -> tuple[MonomialIdeal, dict[tuple[int, int], int]]:
    """Polarization of I and the (variable, copy) -> flat index map.

    ``bounds`` fixes the number of copies per variable; it defaults to the
    largest exponent of each variable in G(I). Pass the bounds of a larger
    ideal to polarize into a common ring.
    """
    if bounds is None:
        bounds = I.max_exponents()
    if len(bounds) != I.nvars:
        raise AmbientError("polarization bounds do not match the ambient dimension")
    layout = polarization_layout(bounds)
    gens = (polarize_monomial(g, layout) for g in I.gens)
    return MonomialIdeal(len(layout), _minimal(gens)), layout


def depolarize(J: MonomialIdeal, layout: dict[tuple[int, int], int], nvars: int) -> MonomialIdeal:
    """Substitute x_{i,j} -> x_i."""
    owner = {k: i for (i, _), k in layout.items()}
    gens = []
    for g in J.gens:
        e = [0] * nvars
        for k, a in enumerate(g):
            e[owner[k]] += a
        gens.append(tuple(e))
    return minimalize(gens, nvars)


def height(I: MonomialIdeal) -> int:
    """Minimum number of variables meeting the support of every generator."""
    if I.is_zero():
        raise ValueError("height of the zero ideal is undefined here")
    if I.is_unit():
        raise ValueError("height of the unit ideal is undefined here")
    supports = [set(support(g)) for g in I.gens]
    for k in range(1, I.nvars + 1):
        for cover in combinations(range(I.nvars), k):
            c = set(cover)
            if all(s & c for s in supports):
                return k
    raise AssertionError("unreachable: the full variable set is a cover")


def lcm_lattice(I: MonomialIdeal) -> list[Monomial]:
    """Closure of G(I) under lcm (the zero element excluded), sorted.

    Every multidegree carrying a nonzero Betti number lies in this set.
    """
    seen = set(I.gens)
    frontier = list(I.gens)
    while frontier:
        fresh = []
        for a in frontier:
            for g in I.gens:
                b = lcm(a, g)
                if b not in seen:
                    seen.add(b)
                    fresh.append(b)
        frontier = fresh
    return sorted(seen, reverse=True)


def embed(I: MonomialIdeal, nvars: int, offset: int = 0) -> MonomialIdeal:
    """Place I into a ring with ``nvars`` variables, shifting indices by ``offset``."""
    if offset + I.nvars > nvars:
        raise AmbientError("target ring too small for the embedding")
    gens = tuple((0,) * offset + g + (0,) * (nvars - offset - I.nvars) for g in I.gens)
    return MonomialIdeal(nvars, gens)
