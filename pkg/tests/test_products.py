"""Strong products: adjacency identity and analytic spectra vs. dense oracles."""

import math

import numpy as np
import pytest

from thetakit.graphs import Graph, complete, cycle, empty, path, petersen, random_regular
from thetakit.products import (
    PRODUCT_VERTEX_CAP,
    power_spectrum,
    product_degree,
    product_order,
    product_spectrum,
    strong_power,
    strong_product,
)
from thetakit.spectra import eigenvalues


def test_small_identities():
    assert strong_product(complete(2), complete(2)) == complete(4)
    g = strong_product(cycle(5), cycle(5))
    assert g.n == 25 and g.degree() == 8


def test_adjacency_is_kron_identity():
    # (A+I) kron (B+I) - I, including irregular factors
    rng = np.random.default_rng(5)
    for _ in range(6):
        n1, n2 = rng.integers(2, 7, size=2)
        a = rng.random((n1, n1)) < 0.5
        a = np.triu(a, 1)
        a = a | a.T
        b = rng.random((n2, n2)) < 0.5
        b = np.triu(b, 1)
        b = b | b.T
        g, h = Graph(a), Graph(b)
        p = strong_product(g, h)
        want = np.kron(a + np.eye(n1, dtype=bool), b + np.eye(n2, dtype=bool))
        np.fill_diagonal(want, False)
        assert np.array_equal(p.adj, want)


def test_strong_power():
    g = cycle(5)
    assert strong_power(g, 1) == g
    assert strong_power(g, 2) == strong_product(g, g)
    with pytest.raises(ValueError):
        strong_power(g, 0)
    with pytest.raises(ValueError):
        strong_power(g, 7)   # 5^7 blows the vertex cap
    assert 5 ** 7 > PRODUCT_VERTEX_CAP


def test_order_and_degree_helpers():
    assert product_order([5, 5, 5]) == 125
    assert product_degree([2, 2, 2]) == 26
    assert strong_power(cycle(5), 3).degree() == product_degree([2, 2, 2])


def test_product_spectrum_matches_dense():
    cases = [
        (cycle(5), cycle(5)),
        (petersen(), cycle(4)),
        (path(4), cycle(6)),              # irregular factor
        (random_regular(8, 3, seed=2), random_regular(9, 4, seed=3)),
        (empty(3), cycle(5)),
        (complete(4), complete(5)),
    ]
    for g, h in cases:
        s = product_spectrum([eigenvalues(g, rtol=1e-9),
                              eigenvalues(h, rtol=1e-9)], rtol=1e-10)
        dense = np.sort(np.linalg.eigvalsh(
            strong_product(g, h).adj.astype(np.float64)))[::-1]
        assert np.max(np.abs(s.expanded() - dense)) < 1e-7


def test_power_spectrum_matches_product_spectrum():
    s = eigenvalues(cycle(5))
    for k in (1, 2, 3, 4):
        a = power_spectrum(s, k)
        b = product_spectrum([s] * k)
        assert a.n == b.n == 5 ** k
        av = [(round(v, 8), m) for v, m in a.groups]
        bv = [(round(v, 8), m) for v, m in b.groups]
        assert av == bv


def test_power_spectrum_handles_huge_powers():
    s = eigenvalues(petersen())
    big = power_spectrum(s, 40)          # 10^40 vertices, 3 groups per factor
    assert big.n == 10 ** 40
    assert big.largest() == pytest.approx(4.0 ** 40 - 1.0, rel=1e-12)


def test_spectrum_caps():
    s = eigenvalues(random_regular(20, 5, seed=4))  # ~20 distinct values
    with pytest.raises(ValueError):
        product_spectrum([s] * 6, cap=10 ** 6)
    with pytest.raises(ValueError):
        power_spectrum(s, 0)
    with pytest.raises(ValueError):
        product_spectrum([])


def test_product_cap():
    with pytest.raises(ValueError):
        strong_product(complete(200), complete(200))
