"""Exact matrix rank over Q and over prime fields.

Matrices are sparse: a list of rows, each row a dict column -> int entry.
Over GF(2) rows are packed into Python ints.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank of a 0/1 matrix whose rows are bitmasks."""
    pivots: dict[int, int] = {}  # leading bit -> row
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                break
            r ^= p
    return len(pivots)


def rank_modp(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}  # pivot column -> normalized row
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            col = min(r)
            prow = pivots.get(col)
            if prow is None:
                inv = pow(r[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in r.items()}
                break
            f = r[col]
            for c, v in prow.items():
                nv = (r.get(c, 0) - f * v) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(pivots)


def rank_rational(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q by fraction-free elimination on integer rows."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            col = min(r)
            prow = pivots.get(col)
            if prow is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                pivots[col] = {c: v // g for c, v in r.items()}
                break
            a, b = prow[col], r[col]
            # r <- a*r - b*prow kills column col
            new = {}
            for c in r.keys() | prow.keys():
                v = a * r.get(c, 0) - b * prow.get(c, 0)
                if v:
                    new[c] = v
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            r = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


def rank(rows: list[dict[int, int]], field_char: int = 0) -> int:
    if field_char == 0:
        return rank_rational(rows)
    if field_char == 2:
        return rank_gf2(sum(1 << c for c, v in row.items() if v % 2) for row in rows)
    return rank_modp(rows, field_char)
