"""Deterministic adjacency spectra and Ramanujan classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

try:
    from numba import njit
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

_SWEEP_LIMIT = 100
MATERIALIZE_CAP = 1_000_000


def _jacobi_python(a: np.ndarray, tol: float) -> np.ndarray:
    """Vectorized cyclic Jacobi fallback; same sweep order as the jit kernel."""
    n = a.shape[0]
    for _ in range(_SWEEP_LIMIT):
        off = math.sqrt(2.0 * (np.triu(a, 1) ** 2).sum())
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
    else:
        raise RuntimeError("jacobi sweep limit reached")
    return np.diagonal(a).copy()


if _HAVE_NUMBA:

    @njit(cache=True)
    def _jacobi_kernel(a, tol):  # pragma: no cover - exercised via wrapper
        n = a.shape[0]
        for _sweep in range(100):
            off = 0.0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    off += a[p, q] * a[p, q]
            off = math.sqrt(2.0 * off)
            if off < tol:
                return 0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                    c = 1.0 / math.sqrt(1.0 + t * t)
                    s = t * c
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                    for k in range(n):
                        apk = a[p, k]
                        aqk = a[q, k]
                        a[p, k] = c * apk - s * aqk
                        a[q, k] = s * apk + c * aqk
                    a[p, q] = 0.0
                    a[q, p] = 0.0
        return 1


def jacobi_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, descending.

    Fixed sweep order, no pivot randomness: identical input gives identical
    output. Sweeps run until the off-diagonal Frobenius norm drops below
    1e-12 * n.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=0.0):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if n == 1:
        return a.diagonal().copy()
    tol = 1e-12 * n
    if _HAVE_NUMBA:
        status = _jacobi_kernel(np.ascontiguousarray(a), tol)
        if status != 0:
            raise RuntimeError("jacobi sweep limit reached")
        vals = np.diagonal(a).copy()
    else:
        vals = _jacobi_python(a, tol)
    return np.sort(vals)[::-1].copy()


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue groups (value, multiplicity) in descending value order.

    `values` is the fully expanded descending array when total multiplicity
    is small enough to materialize; spectra of huge strong powers keep it
    None and expose everything through the groups.
    """

    groups: tuple  # ((value, multiplicity), ...)
    tol: float
    values: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return sum(m for _, m in self.groups)

    def expanded(self) -> np.ndarray:
        if self.values is not None:
            return self.values
        if self.n > MATERIALIZE_CAP:
            raise ValueError("spectrum too large to materialize")
        return np.repeat([v for v, _ in self.groups], [m for _, m in self.groups])

    def largest(self) -> float:
        return self.groups[0][0]

    def second_largest(self) -> float:
        """Second entry of the sorted value list, counting multiplicity."""
        if self.groups[0][1] > 1:
            return self.groups[0][0]
        if len(self.groups) < 2:
            raise ValueError("need at least 2 eigenvalues")
        return self.groups[1][0]

    def smallest(self) -> float:
        return self.groups[-1][0]

    def __iter__(self):
        return iter(self.expanded())


def group_values(values, rtol: float = 1e-6) -> tuple:
    """Collapse a descending value list into (value, multiplicity) pairs.

    Adjacent values within rtol * max(1, |values|_max) of each other land in
    one group; the group value is the mean of its members.
    """
    vals = np.asarray(values, dtype=np.float64)
    if vals.size == 0:
        return ()
    atol = rtol * max(1.0, float(np.abs(vals).max()))
    groups = []
    start = 0
    for i in range(1, vals.size + 1):
        if i == vals.size or vals[i - 1] - vals[i] > atol:
            chunk = vals[start:i]
            groups.append((float(chunk.mean()), int(chunk.size)))
            start = i
    return tuple(groups)


def spectrum_from_values(values, rtol: float = 1e-6) -> Spectrum:
    vals = np.sort(np.asarray(values, dtype=np.float64))[::-1].copy()
    vals.setflags(write=False)
    return Spectrum(group_values(vals, rtol), rtol, vals)


def spectrum_from_groups(groups, rtol: float = 1e-6) -> Spectrum:
    """Build a spectrum from unsorted (value, multiplicity) pairs, merging
    values that agree to tolerance; expanded values only when small."""
    pairs = sorted(((float(v), int(m)) for v, m in groups), reverse=True)
    if not pairs:
        raise ValueError("no groups")
    atol = rtol * max(1.0, max(abs(v) for v, _ in pairs))
    merged: list[list[float]] = []
    for v, m in pairs:
        if merged and merged[-1][0] - v <= atol:
            tot = merged[-1][1] + m
            merged[-1][0] = (merged[-1][0] * merged[-1][1] + v * m) / tot
            merged[-1][1] = tot
        else:
            merged.append([v, m])
    out = tuple((v, m) for v, m in merged)
    total = sum(m for _, m in out)
    values = None
    if total <= MATERIALIZE_CAP:
        values = np.repeat([v for v, _ in out], [m for _, m in out]).astype(np.float64)
        values.setflags(write=False)
    return Spectrum(out, rtol, values)


def eigenvalues(g, rtol: float = 1e-6) -> Spectrum:
    """Adjacency spectrum of a graph, descending, with multiplicity groups."""
    return spectrum_from_values(jacobi_eigenvalues(g.adj.astype(np.float64)), rtol)


def lambda2(g) -> float:
    s = eigenvalues(g)
    if s.n < 2:
        raise ValueError("need at least 2 vertices")
    return float(s.values[1])


def lambda_min(g) -> float:
    s = eigenvalues(g)
    if s.n < 1:
        raise ValueError("empty graph")
    return float(s.values[-1])


def complement_spectrum(s: Spectrum, n: int, d: int) -> Spectrum:
    """Spectrum of the complement of a d-regular graph from the graph's own.

    The top value must match d; one copy of it maps to n - d - 1 and every
    other eigenvalue v maps to -1 - v.
    """
    if s.n != n:
        raise ValueError("spectrum length does not match n")
    if abs(s.largest() - d) > 1e-6 * max(1.0, d):
        raise ValueError("spectrum inconsistent with d-regularity")
    out = [(float(n - d - 1), 1)]
    first = True
    for v, m in s.groups:
        m2 = m - 1 if first else m
        first = False
        if m2:
            out.append((-1.0 - v, m2))
    return spectrum_from_groups(out, s.tol)


def lambda_nontrivial(values, d: float, rtol: float = 1e-6):
    """max |eigenvalue| over eigenvalues different from d and -d.

    All copies of d are dropped (disconnected regular graphs repeat d) and
    all copies of -d (bipartite components). Raises if nothing remains.
    """
    if isinstance(values, Spectrum):
        vals = np.asarray([v for v, _ in values.groups])
    else:
        vals = np.asarray(values, dtype=np.float64)
    atol = rtol * max(1.0, abs(d))
    keep = (np.abs(vals - d) > atol) & (np.abs(vals + d) > atol)
    if not keep.any():
        raise ValueError("no nontrivial eigenvalues")
    return float(np.abs(vals[keep]).max())


@dataclass(frozen=True)
class RamanujanVerdict:
    is_ramanujan: bool
    lam: float            # max nontrivial |eigenvalue|
    threshold: float      # 2 sqrt(d-1)
    margin: float         # threshold - lam

    def __bool__(self):
        return self.is_ramanujan


def ramanujan_verdict_from_values(values, d: int) -> RamanujanVerdict:
    if d < 2:
        raise ValueError("need degree >= 2")
    lam = lambda_nontrivial(values, d)
    thr = 2.0 * math.sqrt(d - 1.0)
    return RamanujanVerdict(lam <= thr + 1e-9, lam, thr, thr - lam)


def is_ramanujan(g) -> RamanujanVerdict:
    """Ramanujan verdict for a connected regular graph of degree >= 2."""
    d = g.degree()
    return ramanujan_verdict_from_values(eigenvalues(g), d)
