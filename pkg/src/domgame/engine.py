"""Exact minimax solving of domination games with pass budgets.

The game state is (dominated mask, mover, passes left). A move at v is legal
iff N[v] brings at least one new vertex into the dominated set; the game ends
when every vertex is dominated. Passes cost nothing and are legal only while
the game is in progress: at least one vertex dominated and at least one not.
A pass is an interruption of ongoing play, not an opening or closing move;
this is the reading under which the pass-budget bounds and the two-sided
stalling test below behave like the restricted games they model (a player
"passing" on a component of a larger game has, by then, always seen play
there). Values are memoized per graph in a table shared by all queries, so a
Solver instance amortizes work across variants and across partially
dominated starting sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .graphs import Graph, vertices

DOMINATOR = 0
STALLER = 1

_MAX_STALLER_PASSES = 63
_MAX_DOMINATOR_PASSES = 3


@dataclass(frozen=True)
class GameVariant:
    """Who moves first and how many free passes each player holds."""

    first_mover: int = DOMINATOR
    staller_passes: int = 0
    dominator_passes: int = 0

    def __post_init__(self) -> None:
        if self.first_mover not in (DOMINATOR, STALLER):
            raise ValueError("first_mover must be DOMINATOR or STALLER")
        if not 0 <= self.staller_passes <= _MAX_STALLER_PASSES:
            raise ValueError(f"staller_passes outside 0..{_MAX_STALLER_PASSES}")
        if not 0 <= self.dominator_passes <= _MAX_DOMINATOR_PASSES:
            raise ValueError(f"dominator_passes outside 0..{_MAX_DOMINATOR_PASSES}")


D_GAME = GameVariant()
S_GAME = GameVariant(first_mover=STALLER)


def staller_pass_game(p: int) -> GameVariant:
    """Dominator-start game where the Staller holds p free passes."""
    return GameVariant(staller_passes=p)


class Move(NamedTuple):
    player: int
    vertex: Optional[int]  # None is a pass


@dataclass(frozen=True)
class GameValue:
    moves: int
    dominator_passes_used: Optional[int] = None


def legal_moves(g: Graph, dominated: int) -> list[int]:
    """Vertices whose play would newly dominate something."""
    return [v for v in range(g.n) if g.closed[v] & ~dominated & g.full_mask]


def _maximal_masks(masks: list[int]) -> list[int]:
    # masks are distinct; keep those not strictly contained in another
    return [a for a in masks if not any(b != a and a & ~b == 0 for b in masks)]


def _minimal_masks(masks: list[int]) -> list[int]:
    return [a for a in masks if not any(b != a and b & ~a == 0 for b in masks)]


class Solver:
    """Memoized game solver bound to one graph.

    continuation_pruning drops moves that a rational player never needs:
    whenever the newly dominated sets of two legal moves nest, the Dominator
    can ignore the smaller and the Staller the larger. It is on by default
    and changes no value, which the differential tests pin down.

    alpha_beta switches the plain minimax to a window search whose table
    stores value bounds. Same answers, sometimes fewer visited states; the
    plain search is the reference configuration.
    """

    def __init__(
        self,
        graph: Graph,
        *,
        continuation_pruning: bool = True,
        alpha_beta: bool = False,
    ):
        self.graph = graph
        self.continuation_pruning = continuation_pruning
        self.alpha_beta = alpha_beta
        # one table per pass-cost mode: 0 charges nothing for Dominator
        # passes, -1 refunds a move per pass (the net-payoff game)
        self._tables: dict[int, dict] = {0: {}, -1: {}}

    # state key: dominated << 9 | mover << 8 | sp << 2 | dp

    def _check_state(self, variant: GameVariant, dominated: int) -> None:
        if dominated & ~self.graph.full_mask:
            raise ValueError("dominated mask has bits outside the vertex range")
        if not isinstance(variant, GameVariant):
            raise TypeError("variant must be a GameVariant")

    def value(self, variant: GameVariant = D_GAME, dominated: int = 0) -> int:
        """Optimal number of counted (vertex) moves from the given start."""
        self._check_state(variant, dominated)
        return self._solve(
            dominated,
            variant.first_mover,
            variant.staller_passes,
            variant.dominator_passes,
            0,
        )

    def net_value(self, dominated: int = 0) -> int:
        """Moves minus Dominator passes used, Dominator holding one pass.

        The pass, like all passes here, is only legal mid-game. The
        Dominator may always decline it, so this never exceeds
        value(D_GAME); equality is the two-sided stalling property tested by
        is_double_staller.
        """
        self._check_state(D_GAME, dominated)
        return self._solve(dominated, DOMINATOR, 0, 1, -1)

    def _solve(self, dom: int, mover: int, sp: int, dp: int, pass_cost: int) -> int:
        if self.alpha_beta:
            return self._solve_window(dom, mover, sp, dp, pass_cost)
        table = self._tables[pass_cost]
        closed = self.graph.closed
        full = self.graph.full_mask
        nrange = range(self.graph.n)
        prune = self.continuation_pruning
        big = self.graph.n + 4

        def rec(dom: int, mover: int, sp: int, dp: int) -> int:
            if dom == full:
                return 0
            key = (dom << 9) | (mover << 8) | (sp << 2) | dp
            cached = table.get(key)
            if cached is not None:
                return cached
            newlys = []
            seen = set()
            for v in nrange:
                newly = closed[v] & ~dom
                if newly and newly not in seen:
                    seen.add(newly)
                    newlys.append(newly)
            if mover == DOMINATOR:
                if prune and len(newlys) > 1:
                    newlys = _maximal_masks(newlys)
                best = big
                for newly in newlys:
                    val = 1 + rec(dom | newly, STALLER, sp, dp)
                    if val < best:
                        best = val
                if dp and dom:
                    val = pass_cost + rec(dom, STALLER, sp, dp - 1)
                    if val < best:
                        best = val
            else:
                if prune and len(newlys) > 1:
                    newlys = _minimal_masks(newlys)
                best = -big
                for newly in newlys:
                    val = 1 + rec(dom | newly, DOMINATOR, sp, dp)
                    if val > best:
                        best = val
                if sp and dom:
                    val = rec(dom, DOMINATOR, sp - 1, dp)
                    if val > best:
                        best = val
            table[key] = best
            return best

        return rec(dom, mover, sp, dp)

    def _solve_window(self, dom: int, mover: int, sp: int, dp: int, pass_cost: int) -> int:
        table = self._tables[pass_cost]
        closed = self.graph.closed
        full = self.graph.full_mask
        nrange = range(self.graph.n)
        prune = self.continuation_pruning
        big = self.graph.n + 4

        def rec(dom: int, mover: int, sp: int, dp: int, alpha: int, beta: int) -> int:
            if dom == full:
                return 0
            key = (dom << 9) | (mover << 8) | (sp << 2) | dp
            ent = table.get(key)
            if ent is not None:
                lo, hi = ent
                if lo == hi or lo >= beta:
                    return lo
                if hi <= alpha:
                    return hi
                if lo > alpha:
                    alpha = lo
                if hi < beta:
                    beta = hi
            newlys = []
            seen = set()
            for v in nrange:
                newly = closed[v] & ~dom
                if newly and newly not in seen:
                    seen.add(newly)
                    newlys.append(newly)
            if mover == DOMINATOR:
                if prune and len(newlys) > 1:
                    newlys = _maximal_masks(newlys)
                newlys.sort(key=lambda m: -m.bit_count())
                best = big
                b = beta
                for newly in newlys:
                    # the +1 move cost shifts the child's window down by one
                    val = 1 + rec(dom | newly, STALLER, sp, dp, alpha - 1, b - 1)
                    if val < best:
                        best = val
                        if best < b:
                            b = best
                        if best <= alpha:
                            break
                else:
                    if dp and dom and best > alpha:
                        val = pass_cost + rec(
                            dom, STALLER, sp, dp - 1, alpha - pass_cost, b - pass_cost
                        )
                        if val < best:
                            best = val
            else:
                if prune and len(newlys) > 1:
                    newlys = _minimal_masks(newlys)
                newlys.sort(key=lambda m: m.bit_count())
                best = -big
                a = alpha
                for newly in newlys:
                    val = 1 + rec(dom | newly, DOMINATOR, sp, dp, a - 1, beta - 1)
                    if val > best:
                        best = val
                        if best > a:
                            a = best
                        if best >= beta:
                            break
                else:
                    if sp and dom and best < beta:
                        val = rec(dom, DOMINATOR, sp - 1, dp, a, beta)
                        if val > best:
                            best = val
            lo, hi = (ent if ent is not None else (-big, big))
            if best <= alpha:
                hi = min(hi, best)
            elif best >= beta:
                lo = max(lo, best)
            else:
                lo = hi = best
            table[key] = (lo, hi)
            return best

        return rec(dom, mover, sp, dp, -big, big)

    def optimal_line(
        self, variant: GameVariant = D_GAME, dominated: int = 0
    ) -> list[Move]:
        """A deterministic optimal play-through of the counted game.

        Each mover takes the lowest-index vertex achieving the game value,
        passing only when no vertex move does.
        """
        return self._line(variant, dominated, 0)

    def _line(self, variant: GameVariant, dominated: int, pass_cost: int) -> list[Move]:
        self._check_state(variant, dominated)
        dom = dominated
        mover = variant.first_mover
        sp = variant.staller_passes
        dp = variant.dominator_passes
        full = self.graph.full_mask
        closed = self.graph.closed
        moves: list[Move] = []
        while dom != full:
            target = self._solve(dom, mover, sp, dp, pass_cost)
            chosen = None
            for v in range(self.graph.n):
                newly = closed[v] & ~dom
                if newly and 1 + self._solve(dom | newly, mover ^ 1, sp, dp, pass_cost) == target:
                    chosen = Move(mover, v)
                    dom |= newly
                    break
            if chosen is None:
                if mover == DOMINATOR and dp and dom:
                    if pass_cost + self._solve(dom, STALLER, sp, dp - 1, pass_cost) == target:
                        chosen = Move(mover, None)
                        dp -= 1
                elif mover == STALLER and sp and dom:
                    if self._solve(dom, DOMINATOR, sp - 1, dp, pass_cost) == target:
                        chosen = Move(mover, None)
                        sp -= 1
            if chosen is None:
                raise AssertionError("no move achieves the memoized value")
            moves.append(chosen)
            mover ^= 1
        return moves


def solve(
    g: Graph,
    variant: GameVariant = D_GAME,
    dominated: int = 0,
    *,
    continuation_pruning: bool = True,
    alpha_beta: bool = False,
) -> GameValue:
    """One-shot game value; build a Solver directly for repeated queries."""
    solver = Solver(g, continuation_pruning=continuation_pruning, alpha_beta=alpha_beta)
    moves = solver.value(variant, dominated)
    passes_used = None
    if variant.dominator_passes:
        line = solver.optimal_line(variant, dominated)
        passes_used = sum(1 for m in line if m.player == DOMINATOR and m.vertex is None)
    return GameValue(moves, passes_used)


def game_value(g: Graph, variant: GameVariant = D_GAME, dominated: int = 0) -> int:
    return Solver(g).value(variant, dominated)


def double_staller_value(g: Graph, dominated: int = 0) -> int:
    """Net payoff (moves minus Dominator passes) with one Dominator pass."""
    return Solver(g).net_value(dominated)


def is_double_staller(g: Graph) -> bool:
    """Whether one free mid-game Dominator pass cannot shave the value.

    True iff the Staller can force the usual value even against a Dominator
    allowed to skip one turn of ongoing play: every skipped turn costs the
    Dominator a full extra countermove.
    """
    solver = Solver(g)
    return solver.net_value(0) == solver.value(D_GAME, 0)


class TraceError(ValueError):
    """Raised when a played line violates the rules or a budget."""


def replay(
    g: Graph, variant: GameVariant, moves: list[Move], dominated: int = 0
) -> int:
    """Validate a full game line and return its counted move total.

    Checks alternation, move legality (every vertex move newly dominates),
    pass budgets, and that the line ends exactly when the graph is dominated.
    """
    dom = dominated
    mover = variant.first_mover
    sp = variant.staller_passes
    dp = variant.dominator_passes
    count = 0
    for i, (player, vertex) in enumerate(moves):
        if dom == g.full_mask:
            raise TraceError(f"move {i}: game already over")
        if player != mover:
            raise TraceError(f"move {i}: expected player {mover}, got {player}")
        if vertex is None:
            if dom == 0:
                raise TraceError(f"move {i}: pass before the game has begun")
            if player == DOMINATOR:
                if dp == 0:
                    raise TraceError(f"move {i}: Dominator has no pass left")
                dp -= 1
            else:
                if sp == 0:
                    raise TraceError(f"move {i}: Staller has no pass left")
                sp -= 1
        else:
            if not 0 <= vertex < g.n:
                raise TraceError(f"move {i}: vertex {vertex} out of range")
            newly = g.closed[vertex] & ~dom
            if not newly:
                raise TraceError(
                    f"move {i}: vertex {vertex} dominates nothing new "
                    f"(dominated = {vertices(dom)})"
                )
            dom |= newly
            count += 1
        mover ^= 1
    if dom != g.full_mask:
        raise TraceError(f"line ended with undominated vertices {vertices(g.full_mask & ~dom)}")
    return count
