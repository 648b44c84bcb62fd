"""Corpora and bulk check drivers for the proved claims.

The exhaustive corpus is one representative per isomorphism class of
connected graphs (every checked property is isomorphism invariant; labeled
enumeration would run the same checks on relabelings). The random corpus is
seeded and its descriptions carry the seed, so a failure names a
reproducible instance.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Iterator

from ..engine import Solver
from ..generate import enumerate_connected_graphs, random_connected_graph
from ..graphs import Graph
from . import checks
from .report import CheckReport

DEFAULT_SEED = 987654321

SolverFactory = Callable[[Graph], Solver]


def exhaustive_corpus(max_n: int = 7, min_n: int = 1) -> Iterator[tuple[str, Graph]]:
    for n in range(min_n, max_n + 1):
        for i, g in enumerate(enumerate_connected_graphs(n, up_to_iso=True)):
            yield f"connected n={n} #{i}", g


def random_corpus(
    count: int = 500, max_n: int = 10, min_n: int = 4, seed: int = DEFAULT_SEED
) -> Iterator[tuple[str, Graph]]:
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(min_n, max_n)
        g = random_connected_graph(n, rng)
        yield f"random seed={seed} #{i} n={n}", g


def _sampled_subsets(rng: random.Random, full: int, count: int) -> list[int]:
    return [rng.getrandbits(64) & full for _ in range(count)]


def proved_theorem_suite(
    instances: Iterable[tuple[str, Graph]],
    *,
    seed: int = DEFAULT_SEED,
    continuation_pairs: int = 4,
    gap_states: int = 2,
    prevertex_exhaustive_max_n: int = 6,
    prevertex_samples: int = 6,
    pass_budgets: tuple[int, ...] = (1, 2),
    main_theorem: bool = True,
    solver_factory: SolverFactory = Solver,
) -> Iterator[CheckReport]:
    """Run every proved-claim checker over the given instances.

    Claims covered per graph: the dominated-set monotonicity (sampled
    nested pairs), the first-mover gap at the empty set and sampled sets,
    the two predomination bounds (exhaustive in (S, x) up to
    prevertex_exhaustive_max_n, sampled beyond), the Staller pass bound,
    and the cut bound with its two corollaries. All are proved statements:
    any holds=false is a solver bug, not a mathematical discovery.
    """
    for desc, g in instances:
        rng = random.Random(f"{seed}:{desc}")
        solver = solver_factory(g)
        full = g.full_mask

        yield checks.check_first_mover_gap(g, 0, solver=solver, description=desc)
        for dom in _sampled_subsets(rng, full, gap_states):
            yield checks.check_first_mover_gap(g, dom, solver=solver, description=desc)

        for _ in range(continuation_pairs):
            smaller = rng.getrandbits(64) & full
            larger = smaller | (rng.getrandbits(64) & full)
            yield checks.check_continuation(
                g, larger, smaller, solver=solver, description=desc
            )

        if g.n <= prevertex_exhaustive_max_n:
            pairs = [(s, x) for s in range(full + 1) for x in range(g.n)]
        else:
            pairs = [
                (rng.getrandbits(64) & full, rng.randrange(g.n))
                for _ in range(prevertex_samples)
            ]
        for s, x in pairs:
            yield checks.check_prevertex(
                g, s, x, whole_neighborhood=True, solver=solver, description=desc
            )
            yield checks.check_prevertex(
                g, s, x, whole_neighborhood=False, solver=solver, description=desc
            )

        for p in pass_budgets:
            yield checks.check_pass_bound(g, p, solver=solver, description=desc)

        if main_theorem and g.n >= 2:
            yield from checks.check_main_theorem(
                g, solver=solver, description=desc, per_cut_reports=True
            )


def conjecture_scan(
    instances: Iterable[tuple[str, Graph]],
) -> Iterator[CheckReport]:
    """γ_g ≤ ⌈n/2⌉ over a stream of (description, graph) instances."""
    for desc, g in instances:
        yield checks.check_traceable_bound(g, description=desc)


def family_range(family: str, lo: int, hi: int) -> Iterator[tuple[str, Graph]]:
    """Instances path:N or cycle:N for N in lo..hi, for scan drivers."""
    from ..families import build

    if family not in ("path", "cycle"):
        raise ValueError("scan families are path and cycle")
    for n in range(lo, hi + 1):
        yield f"{family}:{n}", build(f"{family}:{n}").graph
