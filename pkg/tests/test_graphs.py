from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rp3link import Graph, MarkedGraph
from rp3link.errors import (
    BadVertex,
    DuplicateEdge,
    LoopEdge,
    MarksNotIndependent,
    MissingEdge,
)

from conftest import random_graph


def graphs(max_n=9, p=0.5):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        seed = draw(st.integers(min_value=0, max_value=10**9))
        return random_graph(random.Random(seed), n, p)

    return build()


def test_construction_rejects_bad_edges():
    with pytest.raises(LoopEdge):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(DuplicateEdge):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(BadVertex):
        Graph.from_edges(3, [(0, 3)])


def test_delete_edge_k3_gives_path():
    g = Graph.complete(3).delete_edge(0, 1)
    assert g.degree_sequence() == (1, 1, 2)


def test_delete_edges_k7_gives_19_edges(k7_2nonadj):
    assert k7_2nonadj.n == 7 and k7_2nonadj.m == 19


def test_delete_edge_missing():
    with pytest.raises(MissingEdge):
        Graph.complete(3).delete_edge(0, 1).delete_edge(0, 1)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_delete_then_add_is_identity(g):
    if not g.edges:
        return
    e = g.edges[len(g.edges) // 2]
    assert g.delete_edge(*e).add_edge(*e) == g


def test_contract_c4_gives_c3():
    g = Graph.cycle_graph(4).contract_edge(0, 1)
    assert g.n == 3 and g.m == 3


def test_contract_k3_gives_k2():
    g = Graph.complete(3).contract_edge(0, 1)
    assert g.n == 2 and g.edges == ((0, 1),)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_contract_simplifies(g):
    if not g.edges:
        return
    e = g.edges[0]
    h = g.contract_edge(*e)
    assert h.n == g.n - 1
    assert all(u != v for u, v in h.edges)
    assert len(set(h.edges)) == h.m


def test_delete_vertex_k6_gives_k5(k6):
    assert k6.delete_vertex(3) == Graph.complete(5)


def test_delete_vertex_k7_2adj_gives_k6(k7_2adj, k6):
    assert k7_2adj.delete_vertex(6) == k6


def test_delete_last_vertex():
    g = Graph.from_edges(1, [])
    assert g.delete_vertex(0) == Graph(0, ())
    with pytest.raises(BadVertex):
        g.delete_vertex(1)


@given(graphs(max_n=8))
@settings(max_examples=40, deadline=None)
def test_relabel_round_trip(g):
    rng = random.Random(g.m)
    p = list(range(g.n))
    rng.shuffle(p)
    inv = [0] * g.n
    for i, x in enumerate(p):
        inv[x] = i
    assert g.relabel(p).relabel(inv) == g


def test_components():
    g = Graph.complete(3).disjoint_union(Graph.complete(2))
    assert g.components() == [(0, 1, 2), (3, 4)]
    assert not g.is_connected()


def test_marked_graph_invariants(k6):
    g = k6.delete_edge(0, 1).delete_edge(0, 2).delete_edge(1, 2)
    m = MarkedGraph(g, (0, 1, 2))
    assert m.marks == (0, 1, 2)
    with pytest.raises(MarksNotIndependent):
        MarkedGraph(g, (0, 3, 4))
    with pytest.raises(BadVertex):
        MarkedGraph(g, (0, 1, 1))
