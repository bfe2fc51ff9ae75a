from __future__ import annotations

import random

import networkx as nx
import pytest

from rp3link import (
    Graph,
    glue_therefore,
    is_planar,
    is_projective_planar,
    k6_therefore,
    vertex_connectivity,
)
from rp3link.errors import ObstructionDataMissing

from conftest import random_graph


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_disjoint_union_connectivity(k6):
    k, cut = vertex_connectivity(k6.disjoint_union(k6))
    assert k == 0 and cut == ()


def test_k6_therefore_k6_connectivity():
    t = k6_therefore()
    g = glue_therefore(t, t)
    assert g.n == 9 and g.m == 24
    k, cut = vertex_connectivity(g)
    assert k == 3
    assert set(cut) == set(t.marks)


def test_complete_graph_connectivity(k6):
    assert vertex_connectivity(k6) == (5, None)
    assert vertex_connectivity(Graph.from_edges(1, [])) == (0, None)


def test_connectivity_matches_networkx():
    rng = random.Random(55)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 8), rng.choice([0.3, 0.5, 0.8]))
        k, cut = vertex_connectivity(g)
        assert k == nx.node_connectivity(_nx(g))
        if cut is not None and g.n > 1 and g.is_connected():
            h = g
            for v in sorted(cut, reverse=True):
                h = h.delete_vertex(v)
            assert not h.is_connected() or h.n <= 1


def test_planarity_basics(k33):
    assert is_planar(Graph.complete(4))
    assert not is_planar(k33)
    assert not is_planar(Graph.complete(5))


def test_planarity_matches_networkx():
    rng = random.Random(66)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]))
        assert is_planar(g) == nx.check_planarity(_nx(g))[0]


def test_k7_2e_vertex_deleted_planarity(k7_2nonadj):
    # drop a degree-6 vertex, then one more; the Wagner criterion must agree
    # with an independent planarity oracle, and some second deletion is planar
    h = k7_2nonadj.delete_vertex(0)
    found_planar = False
    for v in range(h.n):
        f = h.delete_vertex(v)
        ours = is_planar(f)
        assert ours == nx.check_planarity(_nx(f))[0]
        found_planar = found_planar or ours
    assert found_planar


def test_projective_planar_requires_dataset(k6):
    with pytest.raises(ObstructionDataMissing):
        is_projective_planar(k6, None)


def test_projective_planar_with_synthetic_dataset(k44e):
    # with {K5, K33} as the obstruction file the test reduces to planarity
    obstructions = [Graph.complete(5), Graph.complete_bipartite(3, 3)]
    rng = random.Random(77)
    for _ in range(10):
        g = random_graph(rng, 7, 0.4)
        assert is_projective_planar(g, obstructions) == is_planar(g)
    # any planar graph passes any obstruction set of non-planar graphs
    assert is_projective_planar(Graph.cycle_graph(6), obstructions)
    # a dataset containing K44-e rejects K44-e itself
    assert not is_projective_planar(k44e, [k44e])
