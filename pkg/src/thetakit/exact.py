"""Exact combinatorial solvers: independence, clique, chromatic number,
and capacity certificates. Branch-and-bound with time budgets; a timeout
yields a certified interval, never a guess."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph

DEFAULT_BUDGET = 60.0


@dataclass(frozen=True)
class SolveResult:
    value: Optional[int]        # exact value, or None on timeout
    lower: int
    upper: int
    witness: Optional[tuple]    # vertex tuple (or coloring tuple) when found
    status: str                 # "exact" | "timeout"
    elapsed: float

    def __post_init__(self):
        if self.status == "exact" and self.lower != self.upper:
            raise ValueError("exact result with open interval")


class _Budget:
    def __init__(self, seconds: float):
        self.deadline = time.monotonic() + seconds
        self.start = time.monotonic()
        self.expired = False
        self._tick = 0

    def check(self) -> bool:
        """True once the deadline has passed (polled every few hundred calls)."""
        self._tick += 1
        if self._tick & 0xFF:
            return self.expired
        if time.monotonic() > self.deadline:
            self.expired = True
        return self.expired

    def elapsed(self) -> float:
        return time.monotonic() - self.start


def _degeneracy_order(adj_masks, n):
    """Vertex elimination order by repeatedly removing a minimum-degree vertex."""
    remaining = (1 << n) - 1
    deg = [bin(adj_masks[v]).count("1") for v in range(n)]
    order = []
    alive = [True] * n
    for _ in range(n):
        v = min((u for u in range(n) if alive[u]), key=lambda u: (deg[u], u))
        order.append(v)
        alive[v] = False
        remaining &= ~(1 << v)
        m = adj_masks[v] & remaining
        while m:
            w = (m & -m).bit_length() - 1
            deg[w] -= 1
            m &= m - 1
    return order


def _greedy_clique(adj_masks, n):
    """Deterministic greedy clique, used as the initial bound."""
    best: tuple = ()
    for seed in sorted(range(n), key=lambda v: -bin(adj_masks[v]).count("1"))[:8]:
        clique = [seed]
        cand = adj_masks[seed]
        while cand:
            v = max(_bits(cand), key=lambda u: (bin(adj_masks[u] & cand).count("1"), -u))
            clique.append(v)
            cand &= adj_masks[v]
        if len(clique) > len(best):
            best = tuple(clique)
    return best


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask &= mask - 1


def _max_clique_masks(adj_masks, n, budget: _Budget, initial=()):
    """Branch and bound maximum clique over bitset adjacency.

    Candidates are greedily colored at every node; branches whose clique
    size plus color bound cannot beat the incumbent are cut. Returns
    (best clique tuple, root upper bound, complete flag).
    """
    order = _degeneracy_order(adj_masks, n)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # relabel so that low indices are removed first (better coloring order)
    masks = [0] * n
    for v in range(n):
        m = adj_masks[v]
        nm = 0
        for w in _bits(m):
            nm |= 1 << pos[w]
        masks[pos[v]] = nm
    best_size = len(initial)
    best_clique = tuple(pos[v] for v in initial)
    complete = True

    def color_bound(cand):
        order_out = []
        bounds = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~masks[v]
                avail &= ~(1 << v)
                uncolored &= ~(1 << v)
                order_out.append(v)
                bounds.append(color)
        return order_out, bounds

    def expand(size, mask, cand):
        nonlocal best_size, best_clique, complete
        if budget.check():
            complete = False
            return
        order_out, bounds = color_bound(cand)
        for i in range(len(order_out) - 1, -1, -1):
            if size + bounds[i] <= best_size:
                return
            v = order_out[i]
            new_mask = mask | (1 << v)
            new_cand = cand & masks[v]
            if size + 1 > best_size:
                best_size = size + 1
                best_clique = tuple(_bits(new_mask))
            if new_cand:
                expand(size + 1, new_mask, new_cand)
                if not complete:
                    return
            cand &= ~(1 << v)

    full = (1 << n) - 1
    _, root_bounds = color_bound(full)
    root_bound = max(root_bounds) if root_bounds else 0
    expand(0, 0, full)
    inv = [0] * n
    for v in range(n):
        inv[pos[v]] = v
    clique = tuple(sorted(inv[v] for v in best_clique))
    return clique, root_bound, complete


def _adj_masks(g: Graph):
    n = g.n
    masks = [0] * n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def clique_number(g: Graph, budget: float = DEFAULT_BUDGET) -> SolveResult:
    """Exact maximum clique size within the time budget."""
    n = g.n
    if n == 0:
        return SolveResult(0, 0, 0, (), "exact", 0.0)
    b = _Budget(budget)
    masks = _adj_masks(g)
    initial = _greedy_clique(masks, n)
    clique, root_bound, complete = _max_clique_masks(masks, n, b, initial)
    size = len(clique)
    if complete:
        return SolveResult(size, size, size, clique, "exact", b.elapsed())
    return SolveResult(None, size, max(root_bound, size), clique, "timeout",
                       b.elapsed())


def independence_number(g: Graph, budget: float = DEFAULT_BUDGET) -> SolveResult:
    """Exact independence number: maximum clique of the complement."""
    return clique_number(g.complement(), budget)


# -- chromatic number -------------------------------------------------


def _dsatur_greedy(masks, n):
    """Greedy DSATUR coloring; returns (color count, coloring list)."""
    colors = [-1] * n
    neighbor_colors = [0] * n
    degs = [bin(m).count("1") for m in masks]
    used = 0
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (bin(neighbor_colors[u]).count("1"), degs[u], -u))
        forbid = neighbor_colors[v]
        c = 0
        while forbid & (1 << c):
            c += 1
        colors[v] = c
        used = max(used, c + 1)
        for w in _bits(masks[v]):
            neighbor_colors[w] |= 1 << c
    return used, colors


def _k_colorable(masks, n, k, budget: _Budget, clique_seed):
    """Backtracking k-coloring in DSATUR order with symmetry breaking.

    Returns (verdict, coloring or None); verdict None means budget expired.
    """
    colors = [-1] * n
    neighbor_colors = [0] * n
    degs = [bin(m).count("1") for m in masks]
    # pre-color a clique: its vertices must all differ anyway
    if len(clique_seed) > k:
        return False, None
    for i, v in enumerate(clique_seed):
        colors[v] = i
        for w in _bits(masks[v]):
            neighbor_colors[w] |= 1 << i
    full = (1 << k) - 1

    def pick():
        best_v = -1
        best_key = None
        for u in range(n):
            if colors[u] >= 0:
                continue
            key = (-bin(neighbor_colors[u] & full).count("1"), -degs[u], u)
            if best_key is None or key < best_key:
                best_key = key
                best_v = u
        return best_v

    max_used = len(clique_seed)

    def solve(remaining, max_used):
        if budget.check():
            return None
        if remaining == 0:
            return True
        v = pick()
        forbid = neighbor_colors[v] & full
        if forbid == full:
            return False
        limit = min(k, max_used + 1)
        for c in range(limit):
            if forbid & (1 << c):
                continue
            colors[v] = c
            touched = []
            dead = False
            for w in _bits(masks[v]):
                if colors[w] < 0 and not neighbor_colors[w] & (1 << c):
                    neighbor_colors[w] |= 1 << c
                    touched.append(w)
                    if neighbor_colors[w] & full == full:
                        dead = True
            if not dead:
                res = solve(remaining - 1, max(max_used, c + 1))
                if res:
                    return True
                if res is None:
                    colors[v] = -1
                    for w in touched:
                        neighbor_colors[w] &= ~(1 << c)
                    return None
            colors[v] = -1
            for w in touched:
                neighbor_colors[w] &= ~(1 << c)
        return False

    res = solve(n - len(clique_seed), max_used)
    if res:
        return True, list(colors)
    return res, None


def chromatic_number(g: Graph, budget: float = DEFAULT_BUDGET) -> SolveResult:
    """Exact chromatic number: test k-colorability upward from a clique
    lower bound, each test a DSATUR-ordered backtracking search."""
    n = g.n
    if n == 0:
        return SolveResult(0, 0, 0, (), "exact", 0.0)
    b = _Budget(budget)
    masks = _adj_masks(g)
    if not any(masks):
        return SolveResult(1, 1, 1, tuple([0] * n), "exact", b.elapsed())
    # exact clique seed when cheap, greedy otherwise
    clique_budget = min(5.0, budget / 4.0)
    cb = _Budget(clique_budget)
    initial = _greedy_clique(masks, n)
    clique, _, complete = _max_clique_masks(masks, n, cb, initial)
    if not complete and len(initial) > len(clique):
        clique = initial
    ub, greedy_cols = _dsatur_greedy(masks, n)
    lb = len(clique)
    best_cols = tuple(greedy_cols)
    k = lb
    while k < ub:
        verdict, cols = _k_colorable(masks, n, k, b, clique)
        if verdict is None:
            return SolveResult(None, k, ub, best_cols, "timeout", b.elapsed())
        if verdict:
            return SolveResult(k, k, k, tuple(cols), "exact", b.elapsed())
        k += 1
    return SolveResult(ub, ub, ub, best_cols, "exact", b.elapsed())


# -- capacity ---------------------------------------------------------


@dataclass(frozen=True)
class CapacityCertificate:
    theta: float
    alpha: Optional[int]
    capacity: Optional[float]   # set only when determined
    status: str                 # "determined" | "gap" | "timeout"
    alpha_result: SolveResult

    def __post_init__(self):
        if self.status == "determined" and self.capacity is None:
            raise ValueError("determined certificate without a value")


def capacity_certificate(g: Graph, theta: float,
                         budget: float = DEFAULT_BUDGET,
                         tol: float = 1e-6) -> CapacityCertificate:
    """Sandwich alpha <= capacity <= theta; determined when the two ends
    agree to tol (then the capacity equals the common value).

    theta must be a genuine upper bound on the independence number (any
    certified theta value is). When the search times out but its best
    witness already meets floor(theta), alpha is pinned by the sandwich
    without an exhaustive search, so a small budget suffices whenever
    such a witness is found early; the budget only bounds the attempt
    at full exactness.
    """
    res = independence_number(g, budget)
    if res.status == "exact":
        alpha = res.value
    elif res.lower >= math.floor(theta + tol):
        alpha = res.lower
    else:
        return CapacityCertificate(float(theta), None, None, "timeout", res)
    if abs(float(theta) - alpha) < tol:
        return CapacityCertificate(float(theta), alpha, float(alpha),
                                   "determined", res)
    return CapacityCertificate(float(theta), alpha, None, "gap", res)


def capacity_power_lb(g: Graph, k: int, budget: float = DEFAULT_BUDGET,
                      cap: int = 20000):
    """Capacity lower bound alpha(G^boxtimes k)^(1/k) from a materialized
    power; returns (bound or None, SolveResult for the power)."""
    from .products import strong_power

    pk = strong_power(g, k, cap)
    res = independence_number(pk, budget)
    if res.status != "exact":
        return None, res
    return res.value ** (1.0 / k), res
