"""Minimal edge cuts, edge connectivity, and bridges.

In a connected graph the minimal edge cuts are exactly the edge boundaries
of vertex bipartitions {A, V \\ A} whose two sides both induce connected
subgraphs, so enumeration walks the 2^(n-1) sides containing vertex 0. Edge
connectivity falls back to pairwise max-flow when the graph is too large for
that walk.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import DEFAULT_MAX_VERTICES, Graph, iter_bits, mask_connected

# Full enumeration is 2^(n-1) connectivity probes; past this size only
# edge_connectivity (via max-flow) stays available.
ENUMERATION_MAX_N = 20


@dataclass(frozen=True)
class CutSet:
    """A minimal edge cut with its witness bipartition.

    side_a is the side containing vertex 0; edges are sorted (u, v) pairs
    with u < v crossing between the sides.
    """

    edges: tuple[tuple[int, int], ...]
    side_a: int
    side_b: int

    @property
    def size(self) -> int:
        return len(self.edges)


def _boundary(g: Graph, side: int) -> tuple[tuple[int, int], ...]:
    out = []
    for u in iter_bits(side):
        for v in iter_bits(g.adjacency(u) & ~side):
            out.append((u, v) if u < v else (v, u))
    return tuple(sorted(out))


def minimal_edge_cuts(g: Graph, *, max_n: int = ENUMERATION_MAX_N) -> list[CutSet]:
    """Every minimal edge cut of a connected graph on >= 2 vertices.

    Sorted by the side_a mask, so order is deterministic.
    """
    if g.n < 2 or not g.is_connected():
        raise ValueError("need a connected graph on at least 2 vertices")
    if g.n > max_n:
        raise ValueError(f"cut enumeration capped at n <= {max_n}, got {g.n}")
    closed = g.closed
    full = g.full_mask
    out = []
    # sides containing vertex 0, excluding the full set
    for half in range(1 << (g.n - 1)):
        side = (half << 1) | 1
        if side == full:
            continue
        other = full & ~side
        if mask_connected(closed, side) and mask_connected(closed, other):
            out.append(CutSet(_boundary(g, side), side, other))
    return out


def remove_cut(g: Graph, cut: CutSet) -> Graph:
    """The graph minus the cut's edges (vertex set unchanged)."""
    drop = set(cut.edges)
    kept = [e for e in g.edges if e not in drop]
    if len(kept) != g.edge_count - len(drop):
        raise ValueError("cut contains edges not present in the graph")
    return Graph.from_edges(g.n, kept, max_n=max(g.n, DEFAULT_MAX_VERTICES))


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal disconnects the graph."""
    if g.n < 2 or not g.is_connected():
        raise ValueError("need a connected graph on at least 2 vertices")
    out = []
    for u, v in g.edges:
        closed = list(g.closed)
        closed[u] &= ~(1 << v)
        closed[v] &= ~(1 << u)
        if not mask_connected(tuple(closed), g.full_mask):
            out.append((u, v))
    return out


def edge_connectivity(g: Graph) -> int:
    """Minimum number of edges whose removal disconnects the graph.

    Uses the cut enumeration under its size cap and pairwise max-flow above
    it; both roads give the same number on the overlap, which is tested.
    """
    if g.n < 2 or not g.is_connected():
        raise ValueError("need a connected graph on at least 2 vertices")
    if g.n <= ENUMERATION_MAX_N:
        return min(c.size for c in minimal_edge_cuts(g))
    return _max_flow_connectivity(g)


def _max_flow_connectivity(g: Graph) -> int:
    # min over t of maxflow(0, t); edge connectivity is realized with the
    # fixed source on one side of some minimum cut
    return min(_max_flow(g, 0, t) for t in range(1, g.n))


def _max_flow(g: Graph, s: int, t: int) -> int:
    """Edmonds-Karp on unit-capacity undirected edges."""
    cap: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        cap[u, v] = 1
        cap[v, u] = 1
    flow = 0
    while True:
        parent: dict[int, int] = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v in iter_bits(g.adjacency(u)):
                if v not in parent and cap.get((u, v), 0) > 0:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return flow
        v = t
        while v != s:
            u = parent[v]
            cap[u, v] -= 1
            cap[v, u] = cap.get((v, u), 0) + 1
            v = u
        flow += 1
