"""Graphs, chordality and the edge ideals of complements of chordal graphs.

Vertices are 0..n-1 internally; a perfect elimination ordering (PEO) is a
list ``sigma`` read as x_{sigma[0]} > x_{sigma[1]} > ... where every vertex's
neighbours among the later vertices form a clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .monomial import MonomialIdeal, minimalize, squarefree


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {(i, j)} out of range")
            norm.add((min(i, j), max(i, j)))
        return cls(n, frozenset(norm))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def closed_neighborhood(self, v: int) -> set[int]:
        return self.neighbors(v) | {v}

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def is_clique(self, vertices: Iterable[int]) -> bool:
        return all(self.has_edge(i, j) for i, j in combinations(sorted(vertices), 2))


def complement(G: Graph) -> Graph:
    return Graph(G.n, frozenset(e for e in combinations(range(G.n), 2) if e not in G.edges))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return minimalize((squarefree(e, G.n) for e in G.edges), G.n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def whisker(G: Graph) -> Graph:
    """G with a pendant vertex n+i attached to every vertex i."""
    return Graph.from_edges(2 * G.n, list(G.edges) + [(i, G.n + i) for i in range(G.n)])


# -- chordality ---------------------------------------------------------------


def is_peo(G: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(G.n)):
        return False
    adj = G.adjacency()
    later: set[int] = set(range(G.n))
    for v in order:
        later.discard(v)
        if not G.is_clique(adj[v] & later):
            return False
    return True


def maximum_cardinality_search(G: Graph) -> list[int]:
    """Visit order of MCS; ties go to the smallest label."""
    adj = G.adjacency()
    weight = [0] * G.n
    visited = [False] * G.n
    order = []
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for u in adj[v]:
            if not visited[u]:
                weight[u] += 1
    return order


def chordal_peo(G: Graph) -> list[int] | None:
    """A PEO of G, or None when G is not chordal.

    The reverse of an MCS visit order is a PEO exactly when G is chordal, so
    verifying it decides chordality.
    """
    order = maximum_cardinality_search(G)[::-1]
    return order if is_peo(G, order) else None


def is_chordal(G: Graph) -> bool:
    return chordal_peo(G) is not None


# -- homological shifts of I(G^c) -----------------------------------------------


def _check_peo(G: Graph, peo: Sequence[int]) -> list[int]:
    peo = list(peo)
    if not is_peo(G, peo):
        raise ValueError("not a perfect elimination ordering")
    return peo


def peo_relabeling(peo: Sequence[int]) -> list[int]:
    """perm with perm[v] = position of v in the PEO; relabeling by it makes
    the PEO the identity."""
    perm = [0] * len(peo)
    for p, v in enumerate(peo):
        perm[v] = p
    return perm


def _chordal_formula_identity(G: Graph, k: int) -> list[tuple[int, ...]]:
    """Index sets for the formula when 0 > 1 > ... > n-1 is a PEO."""
    out = []
    for S in combinations(range(G.n), k + 2):
        for t in range(k + 1):
            if all(not G.has_edge(S[t], S[l]) for l in range(t + 1, k + 2)):
                out.append(S)
                break
    return out


def hs_chordal_complement(G: Graph, peo: Sequence[int], k: int) -> MonomialIdeal:
    """HS_k(I(G^c)) for chordal G from the PEO formula: squarefree monomials
    x_{i_1}...x_{i_{k+2}} (positions in the PEO) with some t < k+2 such that
    i_t is adjacent to none of i_{t+1}, ..., i_{k+2}.

    The formula is applied after relabeling so that the PEO is the identity;
    the result is returned in the original labels.
    """
    peo = _check_peo(G, peo)
    if k < 0:
        raise ValueError("k must be nonnegative")
    H = G.relabel(peo_relabeling(peo))
    gens = []
    for S in _chordal_formula_identity(H, k):
        gens.append(squarefree((peo[p] for p in S), G.n))
    return minimalize(gens, G.n)


def set_formula_complement(G: Graph, i: int, j: int) -> frozenset[int]:
    """set(x_i x_j) for the lex order, G labeled so that the identity is a PEO:
    {0, ..., i-1} together with the k in (i, j) outside N_G[i]."""
    if not i < j:
        raise ValueError("need i < j")
    if G.has_edge(i, j):
        raise ValueError(f"{{{i}, {j}}} is an edge of G, so x_i x_j is not a generator")
    nbhd = G.closed_neighborhood(i)
    return frozenset(range(i)) | frozenset(k for k in range(i + 1, j) if k not in nbhd)


def hs_path_complement(n: int, k: int) -> MonomialIdeal:
    """HS_k(I(P_n^c)): squarefree (k+2)-sets with a gap i_{t+1} - i_t >= 2."""
    if n < 3:
        raise ValueError("need n >= 3")
    gens = []
    for S in combinations(range(n), k + 2):
        if any(S[t + 1] - S[t] >= 2 for t in range(k + 1)):
            gens.append(squarefree(S, n))
    return minimalize(gens, n)


@dataclass(frozen=True)
class IntervalBounds:
    s: int
    projdim: int
    max_nonzero_k: int


def interval_bounds(n: int, cliques: Sequence[Iterable[int]]) -> IntervalBounds:
    """Thresholds for a proper interval graph given as consecutive cliques.

    Each clique must be a run of consecutive labels, and the runs must have
    strictly increasing left and right ends and cover 0..n-1; this is the
    labeling under which the cliques are the maximal cliques of the graph.
    """
    runs = [sorted(set(L)) for L in cliques]
    if len(runs) < 2:
        raise ValueError("need at least two cliques to form consecutive intersections")
    for r in runs:
        if not r or r != list(range(r[0], r[-1] + 1)):
            raise ValueError(f"clique {r} is not a run of consecutive vertices")
    for a, b in zip(runs, runs[1:]):
        if not (a[0] < b[0] and a[-1] < b[-1]):
            raise ValueError("clique runs must have increasing left and right ends")
    covered = set().union(*map(set, runs))
    if covered != set(range(n)):
        raise ValueError("cliques do not cover the vertex set")
    s = min(len(set(a) & set(b)) for a, b in zip(runs, runs[1:]))
    t = n - s - 2
    return IntervalBounds(s, t, t)


def interval_graph(n: int, cliques: Sequence[Iterable[int]]) -> Graph:
    return Graph.from_edges(n, [e for L in cliques for e in combinations(sorted(set(L)), 2)])


# -- independence complex and whiskers ---------------------------------------


def maximal_independent_sets(G: Graph) -> list[frozenset[int]]:
    """Maximal cliques of the complement (Bron-Kerbosch with pivoting)."""
    adj = complement(G).adjacency()
    out: list[frozenset[int]] = []

    def expand(R: set[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            out.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: len(adj[u] & P))
        for v in sorted(P - adj[pivot]):
            expand(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(range(G.n)), set())
    return sorted(out, key=sorted)


def hs_whisker_top(G: Graph) -> MonomialIdeal:
    """HS_{n-1}(I(G*)) = (x_1...x_n * y_F : F a maximal independent set of G),
    with x_i at index i and y_i at index n + i."""
    n = G.n
    gens = []
    for F in maximal_independent_sets(G):
        gens.append(squarefree(list(range(n)) + [n + i for i in F], 2 * n))
    return minimalize(gens, 2 * n)
