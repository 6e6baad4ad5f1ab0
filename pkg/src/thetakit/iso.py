"""Graph isomorphism by color refinement plus backtracking.

Intended for test-scale graphs (tens of vertices). Highly regular graphs
defeat the refinement and fall back to plain backtracking, which is still
fine at that size.
"""

from __future__ import annotations

from .graphs import Graph


def _neighbor_lists(g: Graph):
    return [tuple(g.neighbors(v)) for v in range(g.n)]


def _refine(colors, nbrs, n):
    while True:
        sigs = []
        for v in range(n):
            counts = {}
            for w in nbrs[v]:
                counts[colors[w]] = counts.get(colors[w], 0) + 1
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _class_profile(colors):
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    return sorted(counts.items())


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    n = g.n
    if n == 0:
        return True
    gn = _neighbor_lists(g)
    hn = _neighbor_lists(h)
    gc = _refine([0] * n, gn, n)
    hc = _refine([0] * n, hn, n)
    if _class_profile(gc) != _class_profile(hc):
        return False

    # map g-vertices in order of ascending class size (most constrained first)
    class_size = {}
    for c in gc:
        class_size[c] = class_size.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (class_size[gc[v]], gc[v], v))
    ga = g.adj
    ha = h.adj
    mapping = [-1] * n
    used = [False] * n

    def backtrack(i):
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or hc[w] != gc[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ga[v, u] != ha[w, mapping[u]]:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return backtrack(0)


def is_self_complementary(g: Graph) -> bool:
    return are_isomorphic(g, g.complement())
