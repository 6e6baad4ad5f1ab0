"""Immutable dense graphs, generators, and basic operations."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional

import numpy as np


@dataclass(frozen=True)
class GraphMeta:
    """Asserted structural facts about a graph.

    Flags are catalog/user assertions, never inferred by the library.
    None means "unknown"; bound evaluators gated on a flag treat None
    as not applicable.
    """

    name: str = ""
    vertex_transitive: Optional[bool] = None
    edge_transitive: Optional[bool] = None
    self_complementary: Optional[bool] = None


class Graph:
    """Simple undirected graph on vertices 0..n-1 with dense adjacency.

    The adjacency matrix is a symmetric boolean array with zero diagonal,
    frozen after construction. Instances are immutable; all operations
    return new graphs.
    """

    __slots__ = ("n", "adj", "meta")

    def __init__(self, adj: np.ndarray, meta: GraphMeta | None = None):
        a = np.asarray(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if a.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "n", a.shape[0])
        object.__setattr__(self, "adj", a)
        object.__setattr__(self, "meta", meta or GraphMeta())

    def __setattr__(self, *_):
        raise AttributeError("Graph is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]],
                       meta: GraphMeta | None = None) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            a[u, v] = a[v, u] = True
        return cls(a, meta)

    def with_meta(self, **kwargs) -> "Graph":
        return Graph(self.adj, replace(self.meta, **kwargs))

    # -- basic queries ------------------------------------------------

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1).astype(np.int64)

    def is_regular(self) -> bool:
        d = self.degrees()
        return self.n == 0 or bool((d == d[0]).all())

    def degree(self) -> int:
        """Common degree; raises for irregular graphs."""
        d = self.degrees()
        if self.n and not (d == d[0]).all():
            raise ValueError("graph is not regular")
        return int(d[0]) if self.n else 0

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        iu, iv = np.nonzero(np.triu(self.adj, 1))
        return list(zip(iu.tolist(), iv.tolist()))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, u: int) -> np.ndarray:
        return np.nonzero(self.adj[u])[0]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        while frontier.size:
            nxt = self.adj[frontier].any(axis=0) & ~seen
            seen |= nxt
            frontier = np.nonzero(nxt)[0]
        return bool(seen.all())

    def complement(self) -> "Graph":
        a = ~self.adj
        np.fill_diagonal(a, False)
        name = self.meta.name
        meta = replace(self.meta, name=f"complement({name})" if name else "")
        return Graph(a, meta)

    def subgraph(self, vertices) -> "Graph":
        idx = np.asarray(list(vertices), dtype=np.int64)
        return Graph(self.adj[np.ix_(idx, idx)])

    def relabel(self, perm) -> "Graph":
        """New graph with vertex i placed at position perm[i]."""
        p = np.asarray(perm, dtype=np.int64)
        inv = np.empty_like(p)
        inv[p] = np.arange(self.n)
        return Graph(self.adj[np.ix_(inv, inv)], self.meta)

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        label = f" {self.meta.name!r}" if self.meta.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count()}>"


# -- generators -------------------------------------------------------


def complete(n: int) -> Graph:
    a = np.ones((n, n), dtype=bool)
    np.fill_diagonal(a, False)
    return Graph(a, GraphMeta(name=f"K{n}", vertex_transitive=True,
                              edge_transitive=True))


def empty(n: int) -> Graph:
    return Graph(np.zeros((n, n), dtype=bool),
                 GraphMeta(name=f"empty{n}", vertex_transitive=True))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    meta = GraphMeta(name=f"C{n}", vertex_transitive=True, edge_transitive=True,
                     self_complementary=(n == 5))
    return Graph.from_edge_list(n, edges, meta)


def path(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)]
    return Graph.from_edge_list(n, edges, GraphMeta(name=f"P{n}"))


def complete_bipartite(a: int, b: int) -> Graph:
    n = a + b
    m = np.zeros((n, n), dtype=bool)
    m[:a, a:] = True
    m[a:, :a] = True
    meta = GraphMeta(name=f"K{a},{b}", vertex_transitive=(a == b),
                     edge_transitive=True)
    return Graph(m, meta)


def kneser(m: int, r: int) -> Graph:
    """Vertices are the r-subsets of an m-set, adjacent when disjoint."""
    from itertools import combinations

    if not 0 < r <= m:
        raise ValueError("need 0 < r <= m")
    subsets = [frozenset(c) for c in combinations(range(m), r)]
    n = len(subsets)
    a = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if not subsets[i] & subsets[j]:
                a[i, j] = a[j, i] = True
    return Graph(a, GraphMeta(name=f"kneser({m},{r})", vertex_transitive=True,
                              edge_transitive=True))


def petersen() -> Graph:
    g = kneser(5, 2)
    return g.with_meta(name="petersen")


def paley(q: int) -> Graph:
    """Paley graph on Z_q: x ~ y when x-y is a nonzero square mod q.

    q must be a prime congruent to 1 mod 4 (so -1 is a square and the
    relation is symmetric); prime-power orders are not supported.
    """
    if q < 5 or q % 4 != 1:
        raise ValueError("need q = 1 (mod 4)")
    if any(q % p == 0 for p in range(2, int(q ** 0.5) + 1)):
        raise ValueError("q must be prime")
    squares = {(x * x) % q for x in range(1, q)}
    a = np.zeros((q, q), dtype=bool)
    for i in range(q):
        for j in range(i + 1, q):
            if (i - j) % q in squares:
                a[i, j] = a[j, i] = True
    return Graph(a, GraphMeta(name=f"paley({q})", vertex_transitive=True,
                              edge_transitive=True, self_complementary=True))


def shrikhande() -> Graph:
    """16-vertex graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    diffs = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    a = np.zeros((16, 16), dtype=bool)
    for x1 in range(4):
        for y1 in range(4):
            for x2 in range(4):
                for y2 in range(4):
                    if ((x1 - x2) % 4, (y1 - y2) % 4) in diffs:
                        a[4 * x1 + y1, 4 * x2 + y2] = True
    return Graph(a, GraphMeta(name="shrikhande", vertex_transitive=True))


def hypercube(k: int) -> Graph:
    n = 1 << k
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(k) if u < u ^ (1 << b)]
    return Graph.from_edge_list(n, edges, GraphMeta(
        name=f"Q{k}", vertex_transitive=True, edge_transitive=True))


def frucht() -> Graph:
    """Cubic 12-vertex graph with trivial automorphism group (LCF [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2])."""
    shifts = [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2]
    n = 12
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i, s in enumerate(shifts):
        j = (i + s) % n
        edges.add((min(i, j), max(i, j)))
    return Graph.from_edge_list(n, sorted(edges), GraphMeta(name="frucht"))


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    a = np.zeros((n, n), dtype=bool)
    off = 0
    for g in graphs:
        a[off:off + g.n, off:off + g.n] = g.adj
        off += g.n
    return Graph(a)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular simple graph via the pairing model, deterministic in seed."""
    if n * d % 2 or d >= n:
        raise ValueError("need d < n and n*d even")
    rng = np.random.default_rng(seed)
    for _ in range(2000):
        stubs = np.repeat(np.arange(n), d)
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2)
        if (pairs[:, 0] == pairs[:, 1]).any():
            continue
        seen = {(min(u, v), max(u, v)) for u, v in pairs.tolist()}
        if len(seen) == len(pairs):
            return Graph.from_edge_list(n, sorted(seen),
                                        GraphMeta(name=f"rr({n},{d},{seed})"))
    raise RuntimeError("pairing model failed to produce a simple graph")


def self_complementary_extend(g: Graph) -> Graph:
    """Extend a self-complementary graph by four vertices, preserving the property.

    Appends a path v1-v2-v3-v4 and joins the two middle path vertices to
    every old vertex. If the input is self-complementary the output is
    too (the complement swaps the path ends with the middle and fixes the
    old block up to its own anti-isomorphism); this is trusted by
    construction here and verified by isomorphism search in the tests.
    """
    n = g.n
    a = np.zeros((n + 4, n + 4), dtype=bool)
    a[:n, :n] = g.adj
    v1, v2, v3, v4 = n, n + 1, n + 2, n + 3
    for u, v in [(v1, v2), (v2, v3), (v3, v4)]:
        a[u, v] = a[v, u] = True
    a[:n, v2] = a[v2, :n] = True
    a[:n, v3] = a[v3, :n] = True
    name = g.meta.name
    return Graph(a, GraphMeta(name=f"scx({name})" if name else "",
                              self_complementary=g.meta.self_complementary))
