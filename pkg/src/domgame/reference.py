"""Slow, obviously correct reference implementations.

These exist purely as oracles for differential tests: no memoization, no
pruning, no shared code with the production solver or the cut enumerator.
Keep them dumb.
"""

from __future__ import annotations

from itertools import combinations

from .engine import DOMINATOR, STALLER, D_GAME, GameVariant
from .graphs import Graph, mask_connected


def naive_game_value(
    g: Graph,
    variant: GameVariant = D_GAME,
    dominated: int = 0,
    *,
    dominator_pass_cost: int = 0,
) -> int:
    """Plain-recursion minimax over every legal move, passes included."""
    full = g.full_mask
    closed = g.closed

    def rec(dom: int, mover: int, sp: int, dp: int) -> int:
        if dom == full:
            return 0
        options = []
        for v in range(g.n):
            newly = closed[v] & ~dom
            if newly:
                options.append(1 + rec(dom | newly, mover ^ 1, sp, dp))
        # passes are legal only once the game is in progress
        if mover == DOMINATOR:
            if dp and dom:
                options.append(dominator_pass_cost + rec(dom, STALLER, sp, dp - 1))
            return min(options)
        if sp and dom:
            options.append(rec(dom, DOMINATOR, sp - 1, dp))
        return max(options)

    if dominated & ~full:
        raise ValueError("dominated mask has bits outside the vertex range")
    return rec(dominated, variant.first_mover, variant.staller_passes, variant.dominator_passes)


def naive_net_value(g: Graph, dominated: int = 0) -> int:
    """Reference for the one-Dominator-pass net payoff game."""
    return naive_game_value(
        g,
        GameVariant(dominator_passes=1),
        dominated,
        dominator_pass_cost=-1,
    )


def brute_force_minimal_cuts(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    """All minimal edge cuts of a connected graph, by trying edge subsets.

    A subset is a minimal cut iff removing it disconnects the graph and
    removing any proper subset of it does not; for that it is enough that
    putting back any single edge reconnects.
    """
    if not g.is_connected() or g.n < 2:
        raise ValueError("need a connected graph on at least 2 vertices")
    edges = g.edges
    full = g.full_mask

    def connected_without(removed: frozenset[tuple[int, int]]) -> bool:
        closed = [1 << v for v in range(g.n)]
        for u, v in edges:
            if (u, v) not in removed:
                closed[u] |= 1 << v
                closed[v] |= 1 << u
        return mask_connected(tuple(closed), full)

    cuts = []
    for size in range(1, len(edges) + 1):
        for subset in combinations(edges, size):
            removed = frozenset(subset)
            if connected_without(removed):
                continue
            if all(connected_without(removed - {e}) for e in subset):
                cuts.append(tuple(sorted(subset)))
    return sorted(cuts)
