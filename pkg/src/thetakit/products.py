"""Strong graph products and their spectra without materialization."""

from __future__ import annotations

import math
from itertools import combinations_with_replacement, product as iproduct

import numpy as np

from .graphs import Graph, GraphMeta
from .spectra import Spectrum, spectrum_from_groups

PRODUCT_VERTEX_CAP = 20000
SPECTRUM_COMBO_CAP = 5_000_000


def strong_product(g: Graph, h: Graph, cap: int = PRODUCT_VERTEX_CAP) -> Graph:
    """Strong product: (A+I) kron (B+I) - I on row-major vertex pairs.

    Vertex (i, j) of the product sits at index i*h.n + j.
    """
    n = g.n * h.n
    if n > cap:
        raise ValueError(f"product order {n} exceeds cap {cap}")
    ag = g.adj.astype(np.uint8) + np.eye(g.n, dtype=np.uint8)
    ah = h.adj.astype(np.uint8) + np.eye(h.n, dtype=np.uint8)
    a = np.kron(ag, ah).astype(bool)
    np.fill_diagonal(a, False)
    gname, hname = g.meta.name, h.meta.name
    name = f"{gname}*{hname}" if gname and hname else ""
    return Graph(a, GraphMeta(name=name))


def strong_power(g: Graph, k: int, cap: int = PRODUCT_VERTEX_CAP) -> Graph:
    if k < 1:
        raise ValueError("need k >= 1")
    if g.n ** k > cap:
        raise ValueError(f"power order {g.n ** k} exceeds cap {cap}")
    out = g
    for _ in range(k - 1):
        out = strong_product(out, g, cap)
    name = g.meta.name
    return out.with_meta(name=f"{name}^{k}" if name else "")


def product_order(ns) -> int:
    return math.prod(ns)


def product_degree(ds) -> int:
    """Degree of a strong product of regular factors: prod(1+d_l) - 1."""
    return math.prod(d + 1 for d in ds) - 1


def product_spectrum(spectra, cap: int = SPECTRUM_COMBO_CAP,
                     rtol: float = 1e-6) -> Spectrum:
    """Spectrum of a strong product from factor spectra, group-wise.

    Every eigenvalue of the product is prod(1+v_l) - 1 for one choice of
    eigenvalue per factor; working on (value, multiplicity) groups keeps the
    enumeration at prod(group counts) instead of prod(n_l).
    """
    spectra = list(spectra)
    if not spectra:
        raise ValueError("need at least one factor")
    group_lists = [s.groups for s in spectra]
    combos = math.prod(len(gl) for gl in group_lists)
    if combos > cap:
        raise ValueError(f"{combos} group combinations exceed cap {cap}")
    out = []
    for choice in iproduct(*group_lists):
        v = 1.0
        m = 1
        for value, mult in choice:
            v *= 1.0 + value
            m *= mult
        out.append((v - 1.0, m))
    return spectrum_from_groups(out, rtol)


def power_spectrum(s: Spectrum, k: int, cap: int = SPECTRUM_COMBO_CAP,
                   rtol: float = 1e-6) -> Spectrum:
    """Spectrum of the k-th strong power via multisets of factor groups.

    The g^k ordered group choices collapse to multisets with multinomial
    weights, so high powers stay cheap even when n^k is astronomic.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    groups = s.groups
    count = math.comb(len(groups) + k - 1, k)
    if count > cap:
        raise ValueError(f"{count} multisets exceed cap {cap}")
    out = []
    for combo in combinations_with_replacement(range(len(groups)), k):
        v = 1.0
        m = 1
        coeff = math.factorial(k)
        seen: dict[int, int] = {}
        for idx in combo:
            value, mult = groups[idx]
            v *= 1.0 + value
            m *= mult
            seen[idx] = seen.get(idx, 0) + 1
        for c in seen.values():
            coeff //= math.factorial(c)
        out.append((v - 1.0, m * coeff))
    return spectrum_from_groups(out, rtol)
