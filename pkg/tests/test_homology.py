from __future__ import annotations

import itertools
import random

import pytest

from rp3link import (
    Graph,
    HomologyAssignment,
    all_simple_cycles,
    assignment_from_edge_weights,
    assignment_from_serial,
    assignment_to_serial,
    cycle_basis,
    cycle_space,
    enumerate_assignments,
    evaluate,
    is_minor,
    lift,
    pullback,
    restrict,
)
from rp3link.config import Limits
from rp3link.errors import DimensionExceeded, NotACycle
from rp3link.homology import cycle_vertices
from rp3link.minors import enumerate_minor_models

from conftest import random_graph


def _hamiltonian_cycle_count(g: Graph, verts: tuple[int, ...]) -> int:
    """Oracle: count distinct cycles visiting exactly `verts`."""
    if len(verts) < 3:
        return 0
    first = verts[0]
    rest = verts[1:]
    count = 0
    for perm in itertools.permutations(rest):
        seq = (first,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))):
            count += 1
    return count // 2  # direction


def _cycle_count_oracle(g: Graph) -> int:
    total = 0
    for k in range(3, g.n + 1):
        for verts in itertools.combinations(range(g.n), k):
            total += _hamiltonian_cycle_count(g, verts)
    return total


def test_basis_sizes(k33, k6):
    assert len(cycle_basis(k33)) == 4
    assert len(cycle_basis(k6)) == 10
    tree = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert cycle_basis(tree) == ()


def test_basis_size_formula_random():
    rng = random.Random(17)
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 8), 0.4)
        c = len(g.components())
        assert len(cycle_basis(g)) == g.m - g.n + c


def test_simple_cycle_counts(k33):
    k4 = Graph.complete(4)
    assert len(all_simple_cycles(k4)) == 7
    cycles33 = all_simple_cycles(k33)
    assert len(cycles33) == 15
    assert sorted(c.bit_count() for c in cycles33) == [4] * 9 + [6] * 6
    assert len(all_simple_cycles(Graph.cycle_graph(5))) == 1


def test_simple_cycles_match_oracle():
    rng = random.Random(4)
    for _ in range(8):
        g = random_graph(rng, rng.randint(3, 7), 0.5)
        assert len(all_simple_cycles(g)) == _cycle_count_oracle(g)


def test_enumerate_assignment_counts(k33):
    assert sum(1 for _ in enumerate_assignments(k33)) == 16
    tree = Graph.from_edges(3, [(0, 1), (1, 2)])
    phis = list(enumerate_assignments(tree))
    assert len(phis) == 1 and phis[0].values == 0


def test_dimension_cap():
    k9 = Graph.complete(9)  # dim 28
    with pytest.raises(DimensionExceeded):
        enumerate_assignments(k9)
    assert cycle_space(k9).dim == 28


def test_assignments_distinct_as_functionals(k33):
    cycles = all_simple_cycles(k33)
    profiles = set()
    for phi in enumerate_assignments(k33):
        profiles.add(tuple(evaluate(phi, c) for c in cycles))
    assert len(profiles) == 16


def test_evaluate_linearity(k33):
    rng = random.Random(11)
    cycles = all_simple_cycles(k33)
    for _ in range(100):
        phi = HomologyAssignment(k33, rng.randrange(16))
        c1, c2 = rng.sample(cycles, 2)
        s = c1 ^ c2
        assert evaluate(phi, s) == evaluate(phi, c1) ^ evaluate(phi, c2)


def test_evaluate_zero_functional(k33):
    phi = HomologyAssignment(k33, 0)
    assert all(evaluate(phi, c) == 0 for c in all_simple_cycles(k33))


def test_evaluate_rejects_non_cycles(k33):
    phi = HomologyAssignment(k33, 3)
    with pytest.raises(NotACycle):
        evaluate(phi, 1)  # single edge has odd-degree endpoints


def _decompose_oracle(basis: tuple[int, ...], mask: int) -> int:
    """Fresh elimination: coefficients of mask over the fundamental basis."""
    piv = {}
    for i, b in enumerate(basis):
        m, c = b, 1 << i
        while m:
            t = m.bit_length() - 1
            if t in piv:
                pm, pc = piv[t]
                m ^= pm
                c ^= pc
            else:
                piv[t] = (m, c)
                break
    m, c = mask, 0
    while m:
        t = m.bit_length() - 1
        pm, pc = piv[t]
        m ^= pm
        c ^= pc
    return c


def test_evaluate_matches_basis_decomposition():
    rng = random.Random(23)
    for _ in range(5):
        g = random_graph(rng, 7, 0.5)
        cs = cycle_space(g)
        if cs.dim == 0:
            continue
        cycles = all_simple_cycles(g)
        for _ in range(100):
            phi = HomologyAssignment(g, rng.randrange(1 << cs.dim))
            c = rng.choice(cycles) if cycles else 0
            if not c:
                continue
            coeffs = _decompose_oracle(cs.basis, c)
            expected = (coeffs & phi.values).bit_count() & 1
            assert evaluate(phi, c) == expected


def test_edge_weight_assignment(k33):
    phi = assignment_from_edge_weights(k33, [(0, 3)])
    wmask = k33.edge_mask([(0, 3)])
    for c in all_simple_cycles(k33):
        assert evaluate(phi, c) == (c & wmask).bit_count() & 1


def test_k32_parity():
    k32 = Graph.complete_bipartite(3, 2)
    cycles4 = [c for c in all_simple_cycles(k32) if c.bit_count() == 4]
    assert len(cycles4) == 3
    assert cycle_space(k32).dim == 2
    for phi in enumerate_assignments(k32):
        ones = sum(evaluate(phi, c) for c in cycles4)
        assert ones % 2 == 0


# -- lifting and pullback -------------------------------------------------------


def test_pullback_identity(k33):
    model = next(enumerate_minor_models(k33, k33, first_only=True))
    for v in range(16):
        phi = HomologyAssignment(k33, v)
        assert pullback(phi, model).values == v


def test_pullback_zero_is_zero(k7_2nonadj, k6):
    phi = HomologyAssignment(k7_2nonadj, 0)
    for model in itertools.islice(enumerate_minor_models(k7_2nonadj, k6), 10):
        assert pullback(phi, model).values == 0


def test_contraction_lift_preserves_value():
    # 5-vertex host; contract edge (0,1); oracle = explicit cycle sets
    host = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (2, 4)])
    pattern = host.contract_edge(0, 1)
    model = None
    for m in enumerate_minor_models(host, pattern):
        if any(len(bs) == 2 for bs in m.branch_sets):
            model = m
            break
    assert model is not None
    rng = random.Random(3)
    pcs = cycle_space(pattern)
    for _ in range(30):
        phi = HomologyAssignment(host, rng.randrange(1 << cycle_space(host).dim))
        pb = pullback(phi, model)
        for c in all_simple_cycles(pattern):
            lifted = lift(model, c)
            assert evaluate(pb, c) == evaluate(phi, lifted)


def test_pullback_linearity(k7_2nonadj, k6):
    rng = random.Random(15)
    models = list(itertools.islice(enumerate_minor_models(k7_2nonadj, k6), 5))
    cycles = all_simple_cycles(k6)
    dim = cycle_space(k7_2nonadj).dim
    for model in models:
        phi = HomologyAssignment(k7_2nonadj, rng.randrange(1 << dim))
        pb = pullback(phi, model)
        for _ in range(20):
            c1, c2 = rng.sample(cycles, 2)
            s = c1 ^ c2
            assert evaluate(pb, s) == evaluate(pb, c1) ^ evaluate(pb, c2)


def test_restrict_agrees_on_cycles(k44e):
    rng = random.Random(9)
    sub_vertices = [0, 1, 2, 5, 6, 7]
    for _ in range(20):
        phi = HomologyAssignment(k44e, rng.randrange(256))
        h, psi = restrict(phi, sub_vertices)
        back = {i: v for i, v in enumerate(sorted(sub_vertices))}
        for c in all_simple_cycles(h):
            gmask = k44e.edge_mask(
                (back[a], back[b]) for a, b in h.edges_of_mask(c)
            )
            assert evaluate(psi, c) == evaluate(phi, gmask)


def test_serial_round_trip(k44e):
    rng = random.Random(41)
    for _ in range(10):
        phi = HomologyAssignment(k44e, rng.randrange(256))
        s = assignment_to_serial(phi)
        phi2 = assignment_from_serial(s)
        assert assignment_to_serial(phi2) == s
        assert phi2.dim == phi.dim


def test_cycle_vertices(k33):
    for c in all_simple_cycles(k33):
        assert cycle_vertices(k33, c).bit_count() == c.bit_count()
