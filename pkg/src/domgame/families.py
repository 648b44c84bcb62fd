"""Constructors for the graph families the verifier works with.

Each constructor returns a :class:`LabeledGraph`: the graph plus named marks
for the vertices that later operations need to find again (hamiltonian path
ends, the joint vertices of a two-copy join, and so on).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import DEFAULT_MAX_VERTICES, Graph


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    marks: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name, v in self.marks.items():
            if not 0 <= v < self.graph.n:
                raise ValueError(f"mark {name!r} = {v} outside 0..{self.graph.n - 1}")

    @property
    def n(self) -> int:
        return self.graph.n


def path(n: int, *, max_n: int = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    """Path on n >= 1 vertices; marks a, b are its ends."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], max_n=max_n)
    return LabeledGraph(g, {"a": 0, "b": n - 1})


def cycle(n: int, *, max_n: int = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    """Cycle on n >= 3 vertices; marks a, b are hamiltonian path ends."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    g = Graph.from_edges(n, edges, max_n=max_n)
    return LabeledGraph(g, {"a": 0, "b": n - 1})


def star(n: int, *, max_n: int = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    """Star with center 0 and n >= 1 leaves."""
    if n < 1:
        raise ValueError("star needs n >= 1 leaves")
    g = Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)], max_n=max_n)
    return LabeledGraph(g, {"center": 0})


def complete(n: int, *, max_n: int = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    """Complete graph on n >= 1 vertices; marks a, b for n >= 2."""
    if n < 1:
        raise ValueError("complete needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = Graph.from_edges(n, edges, max_n=max_n)
    marks = {"a": 0, "b": n - 1} if n >= 2 else {}
    return LabeledGraph(g, marks)


def spider(n: int, *, max_n: int = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    """Two-level tree: center 0, n >= 2 middle vertices, 4 leaves on each.

    Order is 5n + 1. Middle vertex i (1-based) is vertex i; its leaves are
    n + 4(i-1) + 1 .. n + 4i.
    """
    if n < 2:
        raise ValueError("spider needs n >= 2 middle vertices")
    edges = [(0, i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        first = n + 4 * (i - 1) + 1
        edges.extend((i, leaf) for leaf in range(first, first + 4))
    g = Graph.from_edges(5 * n + 1, edges, max_n=max_n)
    return LabeledGraph(g, {"center": 0})


def joined_copies(h: Graph, x: int = 0, *, max_n: int = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    """Two copies of h bridged through a two-vertex path at x.

    Vertices 0..n-1 are h, vertices n..2n-1 the second copy (v maps to v+n),
    and two fresh vertices y = 2n, y' = 2n+1 form the induced path
    x - y - y' - x'. Order is 2n + 2.
    """
    if not 0 <= x < h.n:
        raise ValueError(f"joint vertex {x} outside 0..{h.n - 1}")
    n = h.n
    edges = list(h.edges)
    edges.extend((u + n, v + n) for u, v in h.edges)
    y, y2 = 2 * n, 2 * n + 1
    edges.extend([(x, y), (y, y2), (y2, x + n)])
    g = Graph.from_edges(2 * n + 2, edges, max_n=max_n)
    return LabeledGraph(g, {"x": x, "y": y, "y'": y2, "x'": x + n})


def clique_join(
    k: int, h: Graph, a: int, b: int, *, max_n: int = DEFAULT_MAX_VERTICES
) -> LabeledGraph:
    """Complete graph on k vertices tied to h by the two edges au and bv.

    The clique occupies 0..k-1 with u = 0 and v = 1; h occupies k..k+n-1.
    a and b are indices into h (typically hamiltonian path ends). With
    k >= 3 the pair {au, bv} is a minimum edge cut.
    """
    if k < 3:
        raise ValueError("clique_join needs k >= 3")
    if not (0 <= a < h.n and 0 <= b < h.n):
        raise ValueError("attachment vertices outside h")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges.extend((u + k, v + k) for u, v in h.edges)
    edges.append((0, a + k))
    edges.append((1, b + k))
    g = Graph.from_edges(k + h.n, edges, max_n=max_n)
    return LabeledGraph(g, {"u": 0, "v": 1, "a": a + k, "b": b + k})


def disjoint_union(g1: Graph, g2: Graph, *, max_n: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Disjoint union with g2 shifted up by n(g1)."""
    shift = g1.n
    edges = list(g1.edges)
    edges.extend((u + shift, v + shift) for u, v in g2.edges)
    return Graph.from_edges(g1.n + g2.n, edges, max_n=max_n)


# Grammar for textual constructor specs, used by the CLI and the service:
#   path:N  cycle:N  star:N  complete:N  tn:N
#   hx3:<inner spec>[@X]        two joined copies of the inner graph, joint X
#   kkh:K:<inner spec>          clique join; attachment points are the inner
#                               graph's a/b marks (defaults: 0 and n-1)


def build(spec: str, *, max_n: int = DEFAULT_MAX_VERTICES) -> LabeledGraph:
    """Build a graph from a constructor spec string."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty constructor spec")
    base, sep, marker = spec.rpartition("@")
    if not sep:
        base, marker = spec, ""
    tokens = base.split(":")
    family = tokens[0]

    def int_arg(text: str, what: str) -> int:
        try:
            return int(text)
        except ValueError:
            raise ValueError(f"bad constructor spec {spec!r}: {what} must be an integer") from None

    if family in ("path", "cycle", "star", "complete", "tn"):
        if len(tokens) != 2:
            raise ValueError(f"bad constructor spec {spec!r}: expected {family}:N")
        if marker:
            raise ValueError(f"bad constructor spec {spec!r}: @ marker not valid for {family}")
        size = int_arg(tokens[1], "size")
        builder = {
            "path": path,
            "cycle": cycle,
            "star": star,
            "complete": complete,
            "tn": spider,
        }[family]
        return builder(size, max_n=max_n)
    if family == "hx3":
        if len(tokens) < 2:
            raise ValueError(f"bad constructor spec {spec!r}: expected hx3:<inner>")
        inner = build(":".join(tokens[1:]), max_n=max_n)
        x = int_arg(marker, "joint vertex") if marker else inner.marks.get("x", 0)
        return joined_copies(inner.graph, x, max_n=max_n)
    if family == "kkh":
        if len(tokens) < 3:
            raise ValueError(f"bad constructor spec {spec!r}: expected kkh:K:<inner>")
        if marker:
            raise ValueError(f"bad constructor spec {spec!r}: @ marker not valid for kkh")
        k = int_arg(tokens[1], "clique size")
        inner = build(":".join(tokens[2:]), max_n=max_n)
        a = inner.marks.get("a", 0)
        b = inner.marks.get("b", inner.n - 1)
        return clique_join(k, inner.graph, a, b, max_n=max_n)
    raise ValueError(f"bad constructor spec {spec!r}: unknown family {family!r}")
