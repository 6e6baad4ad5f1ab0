"""Generators and the Graph container."""

import numpy as np
import pytest

from thetakit.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    frucht,
    hypercube,
    kneser,
    paley,
    path,
    petersen,
    random_regular,
    self_complementary_extend,
    shrikhande,
)
from thetakit.iso import are_isomorphic, is_self_complementary
from thetakit.srg import srg_check


def test_complete():
    g = complete(5)
    assert g.n == 5
    assert g.edge_count() == 10
    assert g.is_regular() and g.degree() == 4
    assert g.meta.vertex_transitive and g.meta.edge_transitive


def test_empty():
    g = empty(7)
    assert g.n == 7
    assert g.edge_count() == 0
    assert g.degree() == 0


def test_cycle_and_path():
    c = cycle(6)
    assert c.edge_count() == 6 and c.degree() == 2 and c.is_connected()
    p = path(5)
    assert p.edge_count() == 4
    assert sorted(p.degrees().tolist()) == [1, 1, 2, 2, 2]
    with pytest.raises(ValueError):
        cycle(2)


def test_complete_bipartite():
    g = complete_bipartite(3, 4)
    assert g.n == 7 and g.edge_count() == 12
    assert sorted(set(g.degrees().tolist())) == [3, 4]
    assert complete_bipartite(3, 3).is_regular()


def test_kneser_petersen():
    g = kneser(6, 2)
    assert g.n == 15 and g.degree() == 6
    assert are_isomorphic(petersen(), kneser(5, 2))
    with pytest.raises(ValueError):
        kneser(3, 0)


def test_paley():
    g = paley(13)
    assert g.degree() == 6
    assert srg_check(g).as_tuple() == (13, 6, 2, 3)
    assert g.meta.self_complementary
    with pytest.raises(ValueError):
        paley(7)       # 3 mod 4
    with pytest.raises(ValueError):
        paley(9)       # prime power, not prime
    with pytest.raises(ValueError):
        paley(21)      # 1 mod 4 but composite


def test_paley_5_is_the_pentagon():
    assert are_isomorphic(paley(5), cycle(5))


def test_shrikhande():
    g = shrikhande()
    assert srg_check(g).as_tuple() == (16, 6, 2, 2)


def test_hypercube():
    q3 = hypercube(3)
    assert q3.n == 8 and q3.degree() == 3 and q3.is_connected()
    vals = np.sort(np.linalg.eigvalsh(q3.adj.astype(float)))
    assert np.allclose(vals, [-3, -1, -1, -1, 1, 1, 1, 3], atol=1e-9)


def test_frucht():
    g = frucht()
    assert g.n == 12 and g.degree() == 3 and g.is_connected()
    assert srg_check(g) is None


def test_disjoint_union():
    g = disjoint_union(complete(2), complete(2), complete(2))
    assert g.n == 6 and g.degree() == 1 and not g.is_connected()


def test_random_regular_deterministic():
    a = random_regular(14, 5, seed=7)
    b = random_regular(14, 5, seed=7)
    assert a == b
    assert a.is_regular() and a.degree() == 5
    with pytest.raises(ValueError):
        random_regular(7, 3, seed=0)   # odd n*d
    with pytest.raises(ValueError):
        random_regular(5, 5, seed=0)


def test_complement_involution():
    for seed in range(4):
        g = random_regular(10, 3, seed=seed)
        assert g.complement().complement() == g
    c = cycle(5)
    assert are_isomorphic(c.complement(), c)   # C5 is self-complementary


def test_from_edge_list_and_relabel():
    g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g.has_edge(1, 2) and not g.has_edge(0, 3)
    h = g.relabel([3, 2, 1, 0])
    assert are_isomorphic(g, h)
    sub = g.subgraph([0, 1, 2])
    assert sub.n == 3 and sub.edge_count() == 2


def test_graph_is_immutable():
    g = cycle(4)
    with pytest.raises(AttributeError):
        g.n = 7
    assert not g.adj.flags.writeable


def test_with_meta():
    g = cycle(4).with_meta(name="box")
    assert g.meta.name == "box"
    assert g.meta.vertex_transitive   # preserved from the generator


def test_self_complementary_extend():
    # trust boundary: the +4 construction is verified by isomorphism search
    g = cycle(5)
    for _ in range(2):
        g = self_complementary_extend(g)
        assert is_self_complementary(g)
    assert g.n == 13
