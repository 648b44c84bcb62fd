"""Exhaustive and randomized generation of small test graphs.

The exhaustive generator enumerates labeled connected graphs by default and
can instead yield one representative per isomorphism class, which is what the
differential test suites use (the checked properties are all isomorphism
invariant and the labeled count explodes at n = 7).
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from .graphs import Graph, iter_bits, mask_connected

# Enumeration is meant for small n only; labeled counts grow like 2^(n choose 2).
ENUMERATION_CAP = 8


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _graph_from_adj(n: int, adj: tuple[int, ...]) -> Graph:
    closed = tuple(adj[v] | (1 << v) for v in range(n))
    return Graph(n, closed)


def _adj_from_edge_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> tuple[int, ...]:
    adj = [0] * n
    for bit, (u, v) in enumerate(pairs):
        if mask >> bit & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return tuple(adj)


def enumerate_connected_graphs(n: int, *, up_to_iso: bool = False) -> Iterator[Graph]:
    """Yield every connected graph on vertices 0..n-1.

    With ``up_to_iso`` the stream is one canonically labeled representative
    per isomorphism class instead of every labeling. Ordering is
    deterministic in both modes.
    """
    if n < 0 or n > ENUMERATION_CAP:
        raise ValueError(f"enumeration supports 0 <= n <= {ENUMERATION_CAP}")
    if n == 0:
        return
    if up_to_iso:
        for adj in _iso_classes(n):
            if mask_connected(adj, (1 << n) - 1) or n == 1:
                yield _graph_from_adj(n, adj)
        return
    pairs = _pairs(n)
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = _adj_from_edge_mask(n, mask, pairs)
        if n == 1 or mask_connected(adj, full):
            yield _graph_from_adj(n, adj)


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[tuple[int, ...], ...]:
    """All graphs on n vertices up to isomorphism, as adjacency-mask tuples.

    Built by extending each (n-1)-vertex class with every possible
    neighborhood for the new vertex and canonicalizing. Includes
    disconnected graphs; callers filter.
    """
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    seen: set[tuple[int, ...]] = set()
    for smaller in _iso_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = [smaller[v] | ((nbrs >> v & 1) << (n - 1)) for v in range(n - 1)]
            adj.append(nbrs)
            seen.add(canonical_form(n, tuple(adj)))
    return tuple(sorted(seen))


def _refine_ranks(n: int, adj: tuple[int, ...]) -> list[int]:
    """Iterated neighbor-rank refinement; isomorphism-invariant vertex ranks."""
    ranks = [0] * n
    while True:
        sigs = [
            (ranks[v], tuple(sorted(ranks[u] for u in iter_bits(adj[v]))))
            for v in range(n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == ranks:
            return ranks
        ranks = new


def canonical_form(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical relabeling of an adjacency-mask tuple.

    Only permutations that respect the refinement ranks can realize the
    minimum, so the search runs over the product of per-rank-class
    permutations rather than all n! orders.
    """
    if n <= 1:
        return adj
    ranks = _refine_ranks(n, adj)
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(ranks):
        groups.setdefault(r, []).append(v)
    blocks = [groups[r] for r in sorted(groups)]
    edges = [(u, v) for u in range(n) for v in iter_bits(adj[u]) if v > u]
    pair_bit = {}
    for bit, (u, v) in enumerate(_pairs(n)):
        pair_bit[u, v] = bit
    best_mask = None
    for chosen in product(*(permutations(b) for b in blocks)):
        pos = [0] * n
        p = 0
        for block in chosen:
            for old in block:
                pos[old] = p
                p += 1
        mask = 0
        for u, v in edges:
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            mask |= 1 << pair_bit[a, b]
        if best_mask is None or mask < best_mask:
            best_mask = mask
    return _adj_from_edge_mask(n, best_mask or 0, _pairs(n))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    adj = tuple(g.adjacency(v) for v in range(g.n))
    return _graph_from_adj(g.n, canonical_form(g.n, adj))


def random_connected_graph(
    n: int, rng: random.Random, *, edge_prob: float | None = None
) -> Graph:
    """Rejection-sample a connected graph on n >= 1 vertices.

    ``edge_prob`` defaults to a fresh density from the rng per attempt, which
    spreads the samples over sparse and dense graphs instead of clustering
    near the connectivity threshold.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    pairs = _pairs(n)
    full = (1 << n) - 1
    while True:
        p = edge_prob if edge_prob is not None else rng.uniform(0.2, 0.9)
        adj = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if n == 1 or mask_connected(tuple(adj), full):
            return _graph_from_adj(n, tuple(adj))
