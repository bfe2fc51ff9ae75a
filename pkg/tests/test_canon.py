from __future__ import annotations

import itertools
import random

import pytest

from rp3link import (
    Graph,
    automorphism_generators,
    canonical_form,
    canonical_graph,
    group_order,
    orbits,
)
from rp3link.config import Limits
from rp3link.errors import SizeExceeded

from conftest import brute_force_automorphisms, random_graph


def test_canonical_invariant_under_permutation():
    # spec-sized: 20 random graphs up to 12 vertices, 100 permutations each
    rng = random.Random(20240)
    for _ in range(20):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        code = canonical_form(g)
        for _ in range(100):
            p = list(range(n))
            rng.shuffle(p)
            assert canonical_form(g.relabel(p)) == code


def _brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    hset = set(h.edges)
    for perm in itertools.permutations(range(g.n)):
        if all(
            ((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in hset
            for u, v in g.edges
        ) and g.m == h.m:
            return True
    return False


def test_k33_vs_prism_codes_differ(k33):
    prism = Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )
    # oracle: brute force over all 720 permutations
    assert not _brute_force_isomorphic(k33, prism)
    assert canonical_form(k33) != canonical_form(prism)


def test_canonical_codes_match_brute_force_iso():
    rng = random.Random(7)
    gs = [random_graph(rng, 6, 0.5) for _ in range(12)]
    for g, h in itertools.combinations(gs, 2):
        assert (canonical_form(g) == canonical_form(h)) == _brute_force_isomorphic(g, h)


def test_canonical_graph_is_isomorphic_relabeling(k33):
    cg = canonical_graph(k33)
    assert cg.n == k33.n and cg.m == k33.m
    assert canonical_form(cg) == canonical_form(k33)


def test_size_bound():
    g = Graph(25, ())
    with pytest.raises(SizeExceeded):
        canonical_form(g)
    assert canonical_form(g, limits=Limits(max_vertices=30)) is not None


def test_generators_generate_full_group_small():
    rng = random.Random(99)
    samples = [random_graph(rng, n, p) for n in (4, 5, 6, 7) for p in (0.3, 0.6)]
    for g in samples:
        gens = automorphism_generators(g)
        assert group_order(gens, g.n) == len(brute_force_automorphisms(g))


def test_orbits_match_brute_force():
    rng = random.Random(123)
    for _ in range(6):
        g = random_graph(rng, 6, 0.5)
        autos = brute_force_automorphisms(g)
        table = orbits(g)
        # vertex orbits under the full group
        seen = {}
        for v in range(g.n):
            orb = frozenset(a[v] for a in autos)
            seen[min(orb)] = orb
        expected_v = sorted(tuple(sorted(o)) for o in seen.values())
        assert sorted(table.vertex_orbits) == expected_v
        # pair orbits + vfn under the full group
        pair_orbs = {}
        for x, y in itertools.combinations(range(g.n), 2):
            orb = frozenset(
                (min(a[x], a[y]), max(a[x], a[y])) for a in autos
            )
            pair_orbs[min(orb)] = orb
        expected_p = sorted(tuple(sorted(o)) for o in pair_orbs.values())
        assert sorted(table.pair_orbits) == expected_p
        for i, orb in enumerate(table.pair_orbits):
            x, y = orb[0]
            swapped = any(a[x] == y and a[y] == x for a in autos)
            assert table.vfn[i] == (0 if swapped else 1)


def test_orbit_table_invariants(k6, petersen_graph):
    for g in (k6, petersen_graph):
        table = orbits(g)
        all_v = sorted(v for orb in table.vertex_orbits for v in orb)
        assert all_v == list(range(g.n))
        n_pairs = g.n * (g.n - 1) // 2
        assert sum(len(o) for o in table.pair_orbits) == n_pairs
        order = group_order(automorphism_generators(g), g.n)
        for orb in table.vertex_orbits:
            assert order % len(orb) == 0


def test_family_group_orders(k6, petersen_graph):
    assert group_order(automorphism_generators(k6), 6) == 720
    assert group_order(automorphism_generators(petersen_graph), 10) == 120


def test_vfn_zero_gluing_orientations_same_code(k6):
    # both orientations of a vfn=0 pair class produce identical codes
    from rp3link import glue_pair

    a = glue_pair(k6, (0, 1), k6, (0, 1), 0)
    b = glue_pair(k6, (0, 1), k6, (0, 1), 1)
    assert canonical_form(a) == canonical_form(b)
    assert _brute_force_isomorphic_small(a, b)


def _brute_force_isomorphic_small(g: Graph, h: Graph) -> bool:
    # permutation search with degree pruning; n <= 10
    if g.n != h.n or g.m != h.m:
        return False
    hset = set(h.edges)
    degs_g = [g.degree(v) for v in range(g.n)]
    degs_h = [h.degree(v) for v in range(h.n)]

    def extend(mapping, used):
        v = len(mapping)
        if v == g.n:
            return True
        for w in range(h.n):
            if w in used or degs_g[v] != degs_h[w]:
                continue
            ok = True
            for u in range(v):
                gu = g.has_edge(u, v)
                hu = (min(mapping[u], w), max(mapping[u], w)) in hset
                if gu != hu:
                    ok = False
                    break
            if ok:
                mapping.append(w)
                used.add(w)
                if extend(mapping, used):
                    return True
                mapping.pop()
                used.discard(w)
        return False

    return extend([], set())
