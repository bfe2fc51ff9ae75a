from __future__ import annotations

import itertools
import random

import pytest

from rp3link import Graph


@pytest.fixture(scope="session")
def k6():
    return Graph.complete(6)


@pytest.fixture(scope="session")
def k33():
    return Graph.complete_bipartite(3, 3)


@pytest.fixture(scope="session")
def k44e():
    return Graph.complete_bipartite(4, 4).delete_edge(0, 4)


@pytest.fixture(scope="session")
def k7_2adj():
    # vertex 6 keeps neighbours 0..3 only
    return Graph.complete(7).delete_edge(4, 6).delete_edge(5, 6)


@pytest.fixture(scope="session")
def k7_2nonadj():
    return Graph.complete(7).delete_edge(3, 4).delete_edge(5, 6)


@pytest.fixture(scope="session")
def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def brute_force_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the edge set (small n only)."""
    out = []
    eset = set(g.edges)
    for perm in itertools.permutations(range(g.n)):
        if all(
            ((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in eset
            for u, v in g.edges
        ):
            out.append(perm)
    return out
