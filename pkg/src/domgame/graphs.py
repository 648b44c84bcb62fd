"""Bitset-backed simple graphs and the edge-list text format.

Vertices are the integers ``0..n-1``. A vertex set is a plain int used as a
bitmask, so set algebra is ``&``, ``|``, ``~`` and membership is
``mask >> v & 1``. Everything downstream (the game solver, cut enumeration,
graph generation) leans on this representation staying single-word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Default cap keeps every vertex set comfortably inside one machine word and
# keeps exact solving tractable; the hard cap is the point where the bitset
# idiom itself stops making sense.
DEFAULT_MAX_VERTICES = 26
HARD_MAX_VERTICES = 64


class EdgeListError(ValueError):
    """Raised for malformed edge-list text; the message names the bad line."""


def vertex_set(vs: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def vertices(mask: int) -> list[int]:
    """Unpack a bitmask into a sorted list of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph stored as closed-neighborhood bitmasks.

    ``closed[v]`` is the mask of ``N[v]``, i.e. the neighbors of ``v`` plus
    ``v`` itself. Open neighborhoods are recovered as ``closed[v] ^ (1 << v)``.
    """

    n: int
    closed: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > HARD_MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{HARD_MAX_VERTICES}")
        if len(self.closed) != self.n:
            raise ValueError("closed-neighborhood table length does not match n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.closed):
            if not mask >> v & 1:
                raise ValueError(f"closed[{v}] is missing vertex {v} itself")
            if mask & ~full:
                raise ValueError(f"closed[{v}] has bits outside 0..{self.n - 1}")
        for v in range(self.n):
            for u in iter_bits(self.closed[v]):
                if not self.closed[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric between {u} and {v}")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], *, max_n: int = DEFAULT_MAX_VERTICES
    ) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse.

        Self-loops and out-of-range endpoints are rejected. ``max_n`` is the
        construction-time size cap (the hard representation cap is 64).
        """
        if n > max_n:
            raise ValueError(f"vertex count {n} exceeds cap {max_n}")
        closed = [1 << v for v in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            closed[u] |= 1 << v
            closed[v] |= 1 << u
        return cls(n, tuple(closed))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            adj = self.closed[u] >> (u + 1)
            base = u + 1
            while adj:
                low = adj & -adj
                out.append((u, base + low.bit_length() - 1))
                adj ^= low
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.closed) - self.n >> 1

    def adjacency(self, v: int) -> int:
        """Open neighborhood N(v) as a mask."""
        return self.closed[v] ^ (1 << v)

    def closed_neighborhood(self, v: int) -> int:
        """Closed neighborhood N[v] as a mask."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        return self.closed[v]

    def degree(self, v: int) -> int:
        return self.closed[v].bit_count() - 1

    def is_connected(self) -> bool:
        """True for the empty and one-vertex graphs and any connected graph."""
        if self.n <= 1:
            return True
        return mask_connected(self.closed, self.full_mask)


def mask_connected(closed: tuple[int, ...], mask: int) -> bool:
    """Whether the subgraph induced on the vertex set ``mask`` is connected.

    The empty set counts as connected. Edges leaving ``mask`` are ignored.
    """
    if mask == 0:
        return True
    start = mask & -mask
    reached = start
    frontier = start
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= closed[v]
        grow &= mask
        frontier = grow & ~reached
        reached |= frontier
    return reached == mask


def residual_graph(g: Graph, dominated: int) -> tuple[Graph, tuple[int, ...]]:
    """Quotient out the part of ``g`` that no longer matters for the game.

    Drops every vertex whose closed neighborhood lies inside ``dominated``
    and every edge joining two dominated vertices; neither can affect any
    future move. Returns the reduced graph plus a tuple mapping its vertex
    ``i`` back to the original index.
    """
    if dominated & ~g.full_mask:
        raise ValueError("dominated mask has bits outside the vertex range")
    keep = [v for v in range(g.n) if g.closed[v] & ~dominated]
    index = {old: new for new, old in enumerate(keep)}
    edges = []
    for u, v in g.edges:
        if dominated >> u & 1 and dominated >> v & 1:
            continue
        # An endpoint with N[.] inside the dominated set would force the other
        # endpoint to be dominated too, so surviving edges keep both ends.
        edges.append((index[u], index[v]))
    reduced = Graph.from_edges(len(keep), edges, max_n=max(g.n, DEFAULT_MAX_VERTICES))
    return reduced, tuple(keep)


def parse_edge_list(text: str, *, max_n: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Parse the plain text edge-list format.

    Line 1 is ``n m``; the next m lines are ``u v`` with 0 <= u, v < n and
    u != v. Trailing blank lines are tolerated, anything else is an
    ``EdgeListError`` naming the offending line.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListError("line 1: expected header 'n m'")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListError("line 1: expected header 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError("line 1: expected header 'n m'") from None
    if n < 0 or m < 0:
        raise EdgeListError("line 1: negative count in header")
    if n > max_n:
        raise EdgeListError(f"line 1: vertex count {n} exceeds cap {max_n}")
    edges = []
    for i in range(m):
        lineno = i + 2
        if lineno - 1 >= len(lines) or not lines[lineno - 1].strip():
            raise EdgeListError(f"line {lineno}: expected edge 'u v'")
        parts = lines[lineno - 1].split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected edge 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected edge 'u v'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: endpoint outside 0..{n - 1}")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    # edges occupy lines 2..m+1; anything non-blank after that is an error
    for extra in range(m + 2, len(lines) + 1):
        if lines[extra - 1].strip():
            raise EdgeListError(f"line {extra}: unexpected content after {m} edges")
    return Graph.from_edges(n, edges, max_n=max_n)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list, with edges sorted and deduplicated."""
    edges = g.edges
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"
