"""Jacobi eigensolver against the LAPACK oracle, spectrum grouping,
complement spectra, and Ramanujan verdicts."""

import math

import numpy as np
import pytest

from thetakit.graphs import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    frucht,
    hypercube,
    paley,
    petersen,
    random_regular,
)
from thetakit.spectra import (
    Spectrum,
    complement_spectrum,
    eigenvalues,
    group_values,
    is_ramanujan,
    jacobi_eigenvalues,
    lambda_min,
    lambda_nontrivial,
    ramanujan_verdict_from_values,
    spectrum_from_groups,
    spectrum_from_values,
)


def test_jacobi_matches_lapack_on_random_symmetric():
    rng = np.random.default_rng(12)
    for n in (1, 2, 3, 5, 10, 17, 30):
        m = rng.standard_normal((n, n))
        a = (m + m.T) / 2.0
        got = jacobi_eigenvalues(a)
        want = np.sort(np.linalg.eigvalsh(a))[::-1]
        assert np.max(np.abs(got - want)) < 1e-8


def test_jacobi_is_deterministic():
    rng = np.random.default_rng(3)
    m = rng.standard_normal((12, 12))
    a = (m + m.T) / 2.0
    assert np.array_equal(jacobi_eigenvalues(a), jacobi_eigenvalues(a.copy()))


def test_jacobi_rejects_bad_input():
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_petersen_spectrum_groups():
    s = eigenvalues(petersen())
    assert [m for _, m in s.groups] == [1, 5, 4]
    assert [v for v, _ in s.groups] == pytest.approx([3.0, 1.0, -2.0], abs=1e-9)
    assert s.largest() == pytest.approx(3.0)
    assert s.second_largest() == pytest.approx(1.0)
    assert s.smallest() == pytest.approx(-2.0)


def test_second_largest_counts_multiplicity():
    # disconnected regular graph: the top value repeats
    s = eigenvalues(disjoint_union(cycle(4), cycle(4)))
    assert s.second_largest() == pytest.approx(2.0)


def test_group_values_merges_adjacent():
    g = group_values([2.0, 1.0000004, 1.0, -1.0])
    assert [m for _, m in g] == [1, 2, 1]


def test_spectrum_from_groups_merges_and_expands():
    s = spectrum_from_groups([(1.0, 2), (1.0 + 1e-9, 3), (-0.5, 1)])
    assert s.n == 6
    assert len(s.groups) == 2
    assert np.allclose(s.expanded()[:5], 1.0)


def test_complement_spectrum_matches_direct():
    graphs = [petersen(), cycle(5), cycle(6), frucht(), hypercube(3),
              paley(13), random_regular(12, 5, seed=0),
              random_regular(14, 3, seed=1)]
    for g in graphs:
        s = eigenvalues(g)
        comp = complement_spectrum(s, g.n, g.degree())
        direct = eigenvalues(g.complement())
        assert np.max(np.abs(comp.expanded() - direct.expanded())) < 1e-8


def test_complement_spectrum_needs_matching_degree():
    s = eigenvalues(cycle(5))
    with pytest.raises(ValueError):
        complement_spectrum(s, 5, 3)


def test_lambda_min_and_nontrivial():
    assert lambda_min(petersen()) == pytest.approx(-2.0)
    # bipartite: both d and -d are trivial
    vals = eigenvalues(complete_bipartite(3, 3))
    assert lambda_nontrivial(vals, 3) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(ValueError):
        lambda_nontrivial([2.0, -2.0], 2)


def test_ramanujan_verdicts():
    assert is_ramanujan(petersen())          # lam = 2 <= 2 sqrt 2
    assert is_ramanujan(cycle(7))            # cycles always pass: |lam| <= 2
    assert is_ramanujan(paley(13))
    v = ramanujan_verdict_from_values(eigenvalues(petersen()), 3)
    assert v.threshold == pytest.approx(2.0 * math.sqrt(2.0))
    assert v.margin == pytest.approx(v.threshold - 2.0)
    with pytest.raises(ValueError):
        ramanujan_verdict_from_values([1.0, 0.0, -1.0], 1)


def test_spectrum_iter_and_expanded_order():
    s = spectrum_from_values([1.0, 3.0, -2.0])
    assert list(s) == [3.0, 1.0, -2.0]
    assert isinstance(s, Spectrum)


def test_complete_graph_spectrum():
    s = eigenvalues(complete(6))
    assert s.groups[0] == (pytest.approx(5.0), 1)
    assert s.groups[1][0] == pytest.approx(-1.0)
    assert s.groups[1][1] == 5
