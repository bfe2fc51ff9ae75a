from __future__ import annotations

import random

import pytest

from rp3link import (
    Graph,
    canonical_form,
    enumerate_minor_models,
    is_minor,
    validate_model,
)
from rp3link.errors import ModelInvalid, SizeExceeded
from rp3link.minors import MinorModel

from conftest import random_graph


def test_k5_minor_of_k6(k6):
    model = is_minor(Graph.complete(5), k6)
    assert model is not None
    validate_model(model)


def test_petersen_not_minor_of_k6(k6, petersen_graph):
    assert is_minor(petersen_graph, k6) is None


def test_k5_minor_of_petersen(petersen_graph):
    model = is_minor(Graph.complete(5), petersen_graph)
    assert model is not None
    validate_model(model)
    assert is_minor(Graph.complete(6), petersen_graph) is None


def test_k7_2nonadj_contracts_onto_k6(k7_2nonadj, k6):
    model = is_minor(k6, k7_2nonadj)
    assert model is not None
    validate_model(model)
    assert any(len(bs) > 1 for bs in model.branch_sets)


def _all_minors_up_to_iso(g: Graph) -> set[bytes]:
    """Oracle: breadth-first closure under single delete/contract steps."""
    seen = {canonical_form(g): g}
    frontier = [g]
    while frontier:
        h = frontier.pop()
        nxt = []
        for e in h.edges:
            nxt.append(h.delete_edge(*e))
            nxt.append(h.contract_edge(*e))
        if h.n:
            nxt.extend(h.delete_vertex(v) for v in range(h.n))
        for x in nxt:
            c = canonical_form(x)
            if c not in seen:
                seen[c] = x
                frontier.append(x)
    return set(seen)


def test_is_minor_matches_exhaustive_oracle():
    rng = random.Random(31)
    host = random_graph(rng, 5, 0.7)
    minors = _all_minors_up_to_iso(host)
    for _ in range(25):
        h = random_graph(rng, rng.randint(1, 5), 0.6)
        found = is_minor(h, host) is not None
        assert found == (canonical_form(h) in minors), (h, host)


def test_minor_reflexive_transitive():
    rng = random.Random(8)
    for _ in range(8):
        g = random_graph(rng, 6, 0.5)
        assert is_minor(g, g) is not None
        if g.edges:
            h = g.delete_edge(*g.edges[0])
            assert is_minor(h, g) is not None
            if h.edges:
                f = h.contract_edge(*h.edges[-1])
                assert is_minor(f, h) is not None
                assert is_minor(f, g) is not None  # transitivity along the chain


def test_single_step_minors_detected():
    rng = random.Random(77)
    for _ in range(10):
        g = random_graph(rng, 6, 0.6)
        if not g.edges:
            continue
        e = g.edges[rng.randrange(g.m)]
        assert is_minor(g.delete_edge(*e), g) is not None
        assert is_minor(g.contract_edge(*e), g) is not None


def test_every_model_validates(k7_2nonadj, k6):
    count = 0
    for model in enumerate_minor_models(k7_2nonadj, k6):
        validate_model(model)
        count += 1
    assert count == 32


def test_validate_model_rejects_bad_models(k6):
    good = is_minor(Graph.complete(5), k6)
    bad = MinorModel(
        host=good.host,
        pattern=good.pattern,
        branch_sets=good.branch_sets[:-1] + ((0,),),  # overlaps another set
        branch_trees=good.branch_trees,
        edge_map=good.edge_map,
    )
    with pytest.raises(ModelInvalid):
        validate_model(bad)


def test_size_bound():
    with pytest.raises(SizeExceeded):
        is_minor(Graph.complete(3), Graph(25, ()))
