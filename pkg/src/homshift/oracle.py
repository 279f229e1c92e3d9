"""Multigraded Betti numbers and homological shift ideals.

beta_{i,a}(I) is the dimension of the reduced homology H~_{i-1} of the upper
Koszul complex K^a(I) = {F subset of supp(a) : x^a / x_F in I}. Only
multidegrees in the lcm lattice of I can carry nonzero Betti numbers, so the
table is computed cell by cell over that lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .linalg import is_prime, rank
from .monomial import (
    Monomial,
    MonomialIdeal,
    box,
    contains,
    divides,
    lcm_lattice,
    minimalize,
    quotient,
    squarefree,
    support,
)

MAX_VARS = 24
MAX_LATTICE = 100_000


class GuardrailError(ValueError):
    """Instance exceeds the configured size limits of the oracle."""


def check_field(field_char: int) -> int:
    if field_char != 0 and not is_prime(field_char):
        raise ValueError(f"field characteristic must be 0 or a prime, got {field_char}")
    return field_char


# -- simplicial complexes ---------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite simplicial complex on vertices 0..n-1.

    ``faces`` holds every face as a sorted tuple, the empty face included
    unless the complex is void.
    """

    n: int
    faces: frozenset[tuple[int, ...]]

    @classmethod
    def from_facets(cls, n: int, facets) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            f = tuple(sorted(f))
            for k in range(len(f) + 1):
                faces.update(combinations(f, k))
        return cls(n, frozenset(faces))

    def is_void(self) -> bool:
        return not self.faces

    def dim(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-2)

    def faces_of_dim(self, k: int) -> list[tuple[int, ...]]:
        return sorted(f for f in self.faces if len(f) == k + 1)

    def f_vector(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.faces:
            out[len(f) - 1] = out.get(len(f) - 1, 0) + 1
        return out

    def facets(self) -> list[tuple[int, ...]]:
        fs = [set(f) for f in self.faces]
        return sorted(f for f in self.faces if not any(set(f) < g for g in fs))


def _boundary_rank(by_dim: dict[int, list[int]], k: int, field_char: int) -> int:
    """Rank of the boundary map from k-faces to (k-1)-faces; faces are bitmasks."""
    upper = by_dim.get(k)
    lower = by_dim.get(k - 1)
    if not upper or not lower:
        return 0
    index = {f: c for c, f in enumerate(lower)}
    rows = []
    for f in upper:
        row = {}
        sign = 1
        rest = f
        while rest:
            bit = rest & -rest
            row[index[f ^ bit]] = sign
            sign = -sign
            rest ^= bit
        rows.append(row)
    return rank(rows, field_char)


def _reduced_betti_masks(faces, field_char: int) -> dict[int, int]:
    """Nonzero reduced Betti numbers {i: dim H~_i} of a complex of bitmask faces."""
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    if not by_dim:
        return {}
    top = max(by_dim)
    ranks = {k: _boundary_rank(by_dim, k, field_char) for k in range(0, top + 1)}
    out = {}
    for i in range(-1, top + 1):
        h = len(by_dim.get(i, ())) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


def _to_mask(face) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def reduced_homology(C: SimplicialComplex, field_char: int = 0) -> dict[int, int]:
    """All nonzero reduced Betti numbers of C, keyed by dimension (>= -1)."""
    check_field(field_char)
    return _reduced_betti_masks({_to_mask(f) for f in C.faces}, field_char)


def reduced_homology_rank(C: SimplicialComplex, i: int, field_char: int = 0) -> int:
    if i < -1:
        raise ValueError("reduced homology is indexed from -1")
    return reduced_homology(C, field_char).get(i, 0)


def euler_characteristic(C: SimplicialComplex) -> int:
    """Reduced Euler characteristic, counting the empty face in dimension -1."""
    return sum((-1) ** k * c for k, c in C.f_vector().items())


def upper_koszul(I: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """K^a(I) = {F subset of supp(a) : x^a / x_F in I}."""
    faces = []
    supp = support(a)
    for k in range(len(supp) + 1):
        for F in combinations(supp, k):
            if contains(I, quotient(a, squarefree(F, I.nvars))):
                faces.append(F)
    return SimplicialComplex(I.nvars, frozenset(faces))


# -- the per-multidegree kernel ---------------------------------------------


def _submasks(f: int):
    sub = f
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & f


def _nerve_faces(facets: list[int]) -> set[int]:
    """Faces of the nerve of the cover by the simplices ``facets`` (bitmasks
    over facet indices): all index sets whose facets share a vertex."""
    faces = {0}
    frontier = [(0, -1, -1)]  # (face mask, last index, running intersection)
    while frontier:
        face, last, inter = frontier.pop()
        for k in range(last + 1, len(facets)):
            meet = facets[k] if inter == -1 else inter & facets[k]
            if meet:
                new = face | (1 << k)
                faces.add(new)
                frontier.append((new, k, meet))
    return faces


def koszul_homology(gens: tuple[Monomial, ...], a: Monomial, field_char: int) -> dict[int, int]:
    """Reduced homology of K^a(I) computed from the generators dividing x^a.

    K^a(I) is the union of the full simplices S_g = {i in supp(a) : g_i < a_i}
    over generators g | x^a. If some S_g is empty then g = a is itself a
    minimal generator and K^a(I) = {empty face}. A common vertex of all
    facets makes the complex a cone. Otherwise the homology is computed on
    the complex itself or on the nerve of its facets (homotopy equivalent,
    since intersections of simplices are simplices), whichever is smaller.
    """
    sets = []
    for g in gens:
        if divides(g, a):
            m = 0
            for i, (gi, ai) in enumerate(zip(g, a)):
                if gi < ai:
                    m |= 1 << i
            if not m:
                return {-1: 1}
            sets.append(m)
    if not sets:
        return {}
    facets = [s for s in set(sets) if not any(s != t and s & t == s for t in sets)]
    common = facets[0]
    for f in facets[1:]:
        common &= f
    if common:
        return {}
    direct_size = sum(1 << f.bit_count() for f in facets)
    if direct_size <= (1 << len(facets)):
        faces = set()
        for f in facets:
            faces.update(_submasks(f))
    else:
        faces = _nerve_faces(facets)
    return _reduced_betti_masks(faces, field_char)


# -- Betti tables ------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers {(i, a): beta_{i,a}}."""

    nvars: int
    entries: dict[tuple[int, Monomial], int] = field(hash=False)
    field_char: int = 0

    def row(self, i: int) -> dict[Monomial, int]:
        return {a: b for (k, a), b in self.entries.items() if k == i}

    def projdim(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def graded(self) -> dict[tuple[int, int], int]:
        """Aggregated graded Betti numbers {(i, total degree): beta}."""
        out: dict[tuple[int, int], int] = {}
        for (i, a), b in self.entries.items():
            key = (i, sum(a))
            out[key] = out.get(key, 0) + b
        return out

    def total(self, i: int) -> int:
        return sum(self.row(i).values())

    def sorted_entries(self) -> list[tuple[int, Monomial, int]]:
        return sorted(((i, a, b) for (i, a), b in self.entries.items()), key=lambda t: (t[0], tuple(-x for x in t[1])))


def _check_size(I: MonomialIdeal, max_vars: int) -> None:
    if I.nvars > max_vars:
        raise GuardrailError(f"{I.nvars} variables exceeds the limit of {max_vars}")


@lru_cache(maxsize=4096)
def _betti_cached(I: MonomialIdeal, field_char: int, max_lattice: int) -> tuple:
    lattice = lcm_lattice(I)
    if len(lattice) > max_lattice:
        raise GuardrailError(f"lcm lattice has {len(lattice)} elements, limit is {max_lattice}")
    out = []
    for a in lattice:
        for k, h in koszul_homology(I.gens, a, field_char).items():
            out.append(((k + 1, a), h))
    return tuple(out)


def betti_table(
    I: MonomialIdeal,
    field_char: int = 0,
    *,
    full_box: bool = False,
    max_vars: int = MAX_VARS,
    max_lattice: int = MAX_LATTICE,
) -> BettiTable:
    """Multigraded Betti numbers of I over a field of the given characteristic.

    ``full_box`` scans every multidegree below the lcm of all generators
    instead of the lcm lattice; it is meant for validating the lattice
    restriction on tiny inputs.
    """
    check_field(field_char)
    if not I.is_proper_nonzero():
        raise ValueError("Betti table requires a nonzero proper ideal")
    _check_size(I, max_vars)
    if not full_box:
        return BettiTable(I.nvars, dict(_betti_cached(I, field_char, max_lattice)), field_char)
    entries = {}
    for a in box(I.max_exponents()):
        a = tuple(a)
        for k, h in reduced_homology(upper_koszul(I, a), field_char).items():
            entries[(k + 1, a)] = h
    return BettiTable(I.nvars, entries, field_char)


def hs_oracle(I: MonomialIdeal, j: int, field_char: int = 0) -> MonomialIdeal:
    """HS_j(I), generated by the multidegrees of row j of the Betti table.

    The zero ideal has only zero shift ideals; the unit ideal S is free, so
    HS_0(S) = S and the rest vanish.
    """
    if j < 0:
        raise ValueError("homological index must be nonnegative")
    if I.is_zero() or I.is_unit():
        return I if j == 0 else MonomialIdeal.zero(I.nvars)
    table = betti_table(I, field_char)
    return minimalize(table.row(j).keys(), I.nvars)


def hs_all(I: MonomialIdeal, field_char: int = 0) -> list[MonomialIdeal]:
    """[HS_0(I), ..., HS_p(I)] with p the projective dimension."""
    if I.is_zero():
        return []
    if I.is_unit():
        return [I]
    table = betti_table(I, field_char)
    return [minimalize(table.row(j).keys(), I.nvars) for j in range(table.projdim() + 1)]


def projdim(I: MonomialIdeal, field_char: int = 0) -> int:
    return betti_table(I, field_char).projdim()


def has_linear_resolution(I: MonomialIdeal, field_char: int = 0) -> bool:
    if not I.is_proper_nonzero() or not I.is_equigenerated():
        return False
    d = sum(I.gens[0])
    return all(sum(a) == d + i for (i, a) in betti_table(I, field_char).entries)


def is_linearly_related(I: MonomialIdeal, field_char: int = 0) -> bool:
    """Equigenerated with all first syzygies in degree d + 1."""
    if not I.is_proper_nonzero() or not I.is_equigenerated():
        return False
    d = sum(I.gens[0])
    return all(sum(a) == d + 1 for a in betti_table(I, field_char).row(1))
