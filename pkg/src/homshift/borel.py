"""Strongly stable (Borel) ideals, their c-bounded variants, Veronese type
ideals and polymatroidal exchange properties."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .monomial import (
    UNBOUNDED,
    Monomial,
    MonomialIdeal,
    box,
    contains,
    is_bounded,
    max_index,
    minimalize,
    support,
)


class NotEquigeneratedWarning(UserWarning):
    pass


@dataclass(frozen=True)
class BorelSpec:
    seeds: tuple[Monomial, ...]
    bound: tuple[int | None, ...] | None = None

    def __post_init__(self):
        if self.bound is not None:
            for s in self.seeds:
                if not is_bounded(s, self.bound):
                    raise ValueError(f"seed {s} is not bounded by {self.bound}")


def _move(u: Monomial, j: int, i: int) -> Monomial:
    """x_i * u / x_j."""
    e = list(u)
    e[j] -= 1
    e[i] += 1
    return tuple(e)


def _moves(u: Monomial):
    for j, a in enumerate(u):
        if a:
            for i in range(j):
                yield _move(u, j, i)


def is_strongly_stable(I: MonomialIdeal) -> bool:
    return all(contains(I, w) for u in I.gens for w in _moves(u))


def is_c_bounded_strongly_stable(I: MonomialIdeal, c: Sequence[int | None]) -> bool:
    if len(c) != I.nvars:
        raise ValueError("bound vector does not match the ambient dimension")
    if not all(is_bounded(u, c) for u in I.gens):
        return False
    return all(contains(I, w) for u in I.gens for w in _moves(u) if is_bounded(w, c))


def _closure(seeds: Sequence[Monomial], n: int, c: Sequence[int | None] | None) -> MonomialIdeal:
    # Moves keep the degree, so the worklist only ever sees finitely many monomials.
    seen = set(seeds)
    work = list(seeds)
    while work:
        u = work.pop()
        for w in _moves(u):
            if w not in seen and (c is None or is_bounded(w, c)):
                seen.add(w)
                work.append(w)
    return minimalize(seen, n)


def borel_closure(seeds: Sequence[Sequence[int]], nvars: int) -> MonomialIdeal:
    """B(u_1, ..., u_m)."""
    seeds = [tuple(s) for s in seeds]
    return _closure(seeds, nvars, None)


def c_bounded_borel_closure(seeds: Sequence[Sequence[int]], c: Sequence[int | None]) -> MonomialIdeal:
    """B^c(u_1, ..., u_m)."""
    seeds = [tuple(s) for s in seeds]
    for s in seeds:
        if not is_bounded(s, c):
            raise ValueError(f"seed {s} is not c-bounded for c={tuple(c)}")
    return _closure(seeds, len(c), c)


def closure(spec: BorelSpec, nvars: int) -> MonomialIdeal:
    if spec.bound is None:
        return borel_closure(spec.seeds, nvars)
    return c_bounded_borel_closure(spec.seeds, spec.bound)


def stable_closure(seeds: Sequence[Sequence[int]], nvars: int) -> MonomialIdeal:
    """Smallest stable ideal containing the seeds (moves only out of m(u))."""
    I = minimalize(seeds, nvars)
    while True:
        missing = []
        for u in I.gens:
            m = max_index(u)
            for i in range(m):
                w = _move(u, m, i)
                if not contains(I, w):
                    missing.append(w)
        if not missing:
            return I
        I = minimalize(I.gens + tuple(missing), nvars)


def index_sequence(u: Monomial) -> list[int]:
    return [i for i, a in enumerate(u) for _ in range(a)]


def borel_order_leq(v: Monomial, u: Monomial) -> bool:
    """v in B(u) for monomials of equal degree."""
    if sum(v) != sum(u):
        raise ValueError("Borel order compares monomials of the same degree")
    return all(j <= i for j, i in zip(index_sequence(v), index_sequence(u)))


def veronese(c: Sequence[int], n: int, d: int) -> MonomialIdeal:
    """I_{c,n,d}: degree-d monomials with exponents bounded by c."""
    if n < 1 or d < 1 or len(c) != n:
        raise ValueError("need n >= 1, d >= 1 and len(c) == n")
    caps = [min(ci, d) for ci in c]
    gens = [tuple(e) for e in box(caps) if sum(e) == d]
    return minimalize(gens, n)


def veronese_principal_generator(c: Sequence[int], n: int, d: int) -> Monomial:
    """A monomial u with I_{c,n,d} = B^c(u)."""
    if sum(c) < d:
        raise ValueError("Veronese type ideal is zero")
    if c[n - 1] > d:
        return tuple(d if i == n - 1 else 0 for i in range(n))
    m = 0
    tail = 0
    while m < n and tail + c[n - 1 - m] <= d:
        tail += c[n - 1 - m]
        m += 1
    u = [0] * n
    for i in range(n - m, n):
        u[i] = c[i]
    if m < n:
        u[n - m - 1] = d - tail
    return tuple(u)


def support_restriction(I: MonomialIdeal, ell: int) -> MonomialIdeal:
    """I_{>ell}: generators whose support has more than ell variables."""
    if not I.is_equigenerated():
        raise ValueError("support restriction is defined for equigenerated ideals")
    return MonomialIdeal(I.nvars, tuple(u for u in I.gens if len(support(u)) > ell))


def hs_veronese(c: Sequence[int], n: int, d: int, ell: int) -> MonomialIdeal:
    """Closed form HS_ell(I_{c,n,d}) = (I_{c,n,d+ell})_{>ell}."""
    if sum(c) < d:
        raise ValueError("Veronese type ideal is zero")
    if ell == 0:
        return veronese(c, n, d)
    return support_restriction(veronese(c, n, d + ell), ell)


def _exchange(u: Monomial, i: int, j: int) -> Monomial:
    """x_j * u / x_i."""
    return _move(u, i, j)


def _warn_not_equigenerated(name: str) -> None:
    warnings.warn(f"{name}: ideal is not equigenerated", NotEquigeneratedWarning, stacklevel=3)


def is_polymatroidal(I: MonomialIdeal) -> bool:
    """Exchange property: for u, v in G(I) and a_i > b_i there is j with
    a_j < b_j and x_j u / x_i in G(I)."""
    if not I.is_equigenerated():
        _warn_not_equigenerated("is_polymatroidal")
        return False
    gens = set(I.gens)
    n = I.nvars
    for u in I.gens:
        for v in I.gens:
            for i in range(n):
                if u[i] > v[i]:
                    if not any(u[j] < v[j] and _exchange(u, i, j) in gens for j in range(n)):
                        return False
    return True


def satisfies_strong_exchange(I: MonomialIdeal) -> bool:
    """Polymatroidal, and x_j u / x_i in G(I) for every i with a_i > b_i and
    every j with a_j < b_j."""
    if not I.is_equigenerated():
        _warn_not_equigenerated("satisfies_strong_exchange")
        return False
    if not is_polymatroidal(I):
        return False
    gens = set(I.gens)
    n = I.nvars
    for u in I.gens:
        for v in I.gens:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                for j in range(n):
                    if u[j] < v[j] and _exchange(u, i, j) not in gens:
                        return False
    return True


def unbounded(n: int) -> tuple[None, ...]:
    return (UNBOUNDED,) * n


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    return veronese([1] * n, n, d)

