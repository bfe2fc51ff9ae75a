"""Vertex connectivity with witnessing cut sets, and planarity tests."""

from __future__ import annotations

from .config import DEFAULT_LIMITS, Limits
from .errors import ObstructionDataMissing, SizeExceeded
from .graphs import Graph
from .minors import is_minor


def _min_vertex_cut_st(g: Graph, s: int, t: int) -> tuple[int, tuple[int, ...]]:
    """Menger via unit-capacity max flow on the split digraph."""
    n = g.n
    # node 2v = v_in, 2v+1 = v_out; arcs: v_in->v_out (cap 1), u_out->v_in (inf)
    size = 2 * n
    INF = n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1 if v not in (s, t) else INF
    for u, v in g.edges:
        cap[(2 * u + 1, 2 * v)] = INF
        cap[(2 * v + 1, 2 * u)] = INF
    adj: list[list[int]] = [[] for _ in range(size)]
    for a, b in list(cap):
        adj[a].append(b)
        adj[b].append(a)
        cap.setdefault((b, a), 0)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            a = queue.pop(0)
            for b in adj[a]:
                if b not in parent and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1
    reach = {source}
    queue = [source]
    while queue:
        a = queue.pop(0)
        for b in adj[a]:
            if b not in reach and cap.get((a, b), 0) > 0:
                reach.add(b)
                queue.append(b)
    cut = tuple(
        v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach
    )
    return flow, cut


def vertex_connectivity(g: Graph) -> tuple[int, tuple[int, ...] | None]:
    """Vertex connectivity and, when k < n-1, a witnessing cut set.

    Disconnected graphs have connectivity 0 (empty cut); complete graphs
    n-1 with no cut set.
    """
    n = g.n
    if n <= 1:
        return 0, None
    if not g.is_connected():
        return 0, ()
    best = n - 1
    witness: tuple[int, ...] | None = None
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            k, cut = _min_vertex_cut_st(g, s, t)
            if k < best:
                best, witness = k, cut
    return best, witness


_K5 = Graph.complete(5)
_K33 = Graph.complete_bipartite(3, 3)


def is_planar(g: Graph, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Wagner criterion: planar iff neither K5 nor K_{3,3} is a minor."""
    if g.n > limits.max_vertices:
        raise SizeExceeded(f"{g.n} vertices exceeds bound {limits.max_vertices}")
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return is_minor(_K5, g, limits) is None and is_minor(_K33, g, limits) is None


def is_projective_planar(
    g: Graph, obstructions: list[Graph] | None, limits: Limits = DEFAULT_LIMITS
) -> bool:
    """Minor-obstruction test against an externally supplied dataset.

    The 35-graph minor obstruction set for the projective plane is not
    bundled; callers load it from a file of graph6 or edge-list records.
    """
    if obstructions is None:
        raise ObstructionDataMissing(
            "projective-plane obstruction dataset required (pass --obstructions)"
        )
    if g.n > limits.max_vertices:
        raise SizeExceeded(f"{g.n} vertices exceeds bound {limits.max_vertices}")
    for obs in obstructions:
        if obs.n <= g.n and obs.m <= g.m and is_minor(obs, g, limits) is not None:
            return False
    return True
