"""Request handlers shared by the HTTP routes and the CLI.

Handlers raise ValueError for anything that is the caller's fault; the HTTP
layer maps that to 400 and the CLI to exit code 2.
"""

from __future__ import annotations

from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator, Optional

from ..cuts import bridges, edge_connectivity, minimal_edge_cuts
from ..engine import DOMINATOR, D_GAME, GameVariant, Solver
from ..families import LabeledGraph, build
from ..graphs import (
    DEFAULT_MAX_VERTICES,
    Graph,
    parse_edge_list,
    serialize_edge_list,
    vertex_set,
    vertices,
)
from ..verify import checks, suites
from ..verify.report import CheckReport, verdict
from . import schemas


class SolverCache:
    """Keeps recently used Solver sessions, keyed by the exact graph."""

    def __init__(self, capacity: int = 32):
        self.capacity = capacity
        self._entries: OrderedDict[tuple[int, ...], Solver] = OrderedDict()

    def get(self, g: Graph) -> Solver:
        key = g.closed
        solver = self._entries.get(key)
        if solver is None:
            solver = Solver(g)
            self._entries[key] = solver
            while len(self._entries) > self.capacity:
                self._entries.popitem(last=False)
        else:
            self._entries.move_to_end(key)
        return solver


def resolve_graph(gi: schemas.GraphInput) -> tuple[Graph, dict[str, int], str]:
    """GraphInput to (graph, marks, description)."""
    max_n = gi.max_n or DEFAULT_MAX_VERTICES
    if gi.construct_spec is not None:
        lab = build(gi.construct_spec, max_n=max_n)
        return lab.graph, dict(lab.marks), gi.construct_spec
    g = parse_edge_list(gi.edge_list or "", max_n=max_n)
    return g, {}, f"edge list, n={g.n}"


def _variant(v: schemas.VariantInput) -> GameVariant:
    return GameVariant(
        first_mover=1 if v.s_game else DOMINATOR,
        staller_passes=v.staller_passes,
        dominator_passes=v.dominator_passes,
    )


def value_label(v: schemas.VariantInput) -> str:
    if v.s_game and not v.staller_passes and not v.dominator_passes:
        return "gamma_g'"
    if not v.s_game and v.staller_passes and not v.dominator_passes:
        return f"gamma_g^St,{v.staller_passes}"
    if not v.s_game and not v.staller_passes and not v.dominator_passes:
        return "gamma_g"
    return "value"


def handle_gamma(req: schemas.GammaRequest, cache: Optional[SolverCache] = None) -> schemas.GammaResponse:
    g, _, _ = resolve_graph(req.graph)
    variant = _variant(req.variant)
    dominated = vertex_set(req.dominated)
    if dominated & ~g.full_mask:
        raise ValueError("dominated vertices outside the graph")
    solver = cache.get(g) if cache is not None else Solver(g)
    value = solver.value(variant, dominated)
    trace = None
    if req.trace:
        line = solver.optimal_line(variant, dominated)
        trace = [
            schemas.TraceMove(player="D" if m.player == DOMINATOR else "S", vertex=m.vertex)
            for m in line
        ]
    return schemas.GammaResponse(
        label=value_label(req.variant), value=value, n=g.n, trace=trace
    )


def handle_cuts(req: schemas.CutsRequest, cache: Optional[SolverCache] = None) -> schemas.CutsResponse:
    g, _, _ = resolve_graph(req.graph)
    cuts = minimal_edge_cuts(g)
    return schemas.CutsResponse(
        count=len(cuts),
        edge_connectivity=min(c.size for c in cuts),
        bridges=bridges(g),
        cuts=[
            schemas.CutRecord(
                edges=list(c.edges),
                side_a=vertices(c.side_a),
                side_b=vertices(c.side_b),
                size=c.size,
            )
            for c in cuts
        ],
    )


def handle_double_staller(
    req: schemas.DoubleStallerRequest, cache: Optional[SolverCache] = None
) -> schemas.DoubleStallerResponse:
    g, _, _ = resolve_graph(req.graph)
    solver = cache.get(g) if cache is not None else Solver(g)
    gamma = solver.value(D_GAME, 0)
    net = solver.net_value(0)
    return schemas.DoubleStallerResponse(
        is_double_staller=net == gamma, gamma=gamma, net_value=net
    )


def handle_construct(req: schemas.ConstructRequest) -> schemas.ConstructResponse:
    lab = build(req.spec, max_n=req.max_n or DEFAULT_MAX_VERTICES)
    g = lab.graph
    return schemas.ConstructResponse(
        n=g.n, m=g.edge_count, edge_list=serialize_edge_list(g), marks=dict(lab.marks)
    )


VERIFY_CLAIMS = (
    "lem1.1",
    "thm1.2",
    "lem2.1",
    "cor2.3",
    "lem2.4",
    "thm3.1",
    "cor3.2",
    "cor3.3",
    "thm4.1",
    "tn",
    "thm5.1",
    "eq2",
    "conj-traceable",
    "suite",
)


def _need_graph(req: schemas.VerifyRequest) -> Graph:
    if req.graph is None:
        raise ValueError(f"claim {req.claim} needs a graph")
    g, _, _ = resolve_graph(req.graph)
    return g


def _hx3_base(req: schemas.VerifyRequest) -> LabeledGraph:
    # thm4.1 checks hypotheses on the base graph H, so the instance must
    # arrive as an hx3 constructor we can split open
    if req.graph is None or req.graph.construct_spec is None or not req.graph.construct_spec.startswith("hx3:"):
        raise ValueError("claim thm4.1 needs --construct hx3:<base spec>")
    spec = req.graph.construct_spec
    base, sep, marker = spec.rpartition("@")
    if not sep:
        base, marker = spec, ""
    inner = build(base[len("hx3:"):], max_n=(req.graph.max_n or DEFAULT_MAX_VERTICES))
    x = int(marker) if marker else inner.marks.get("x", 0)
    marks = dict(inner.marks)
    marks["x"] = x
    return LabeledGraph(inner.graph, marks)


def verify_reports(req: schemas.VerifyRequest) -> list[CheckReport]:
    claim = req.claim
    dominated = vertex_set(req.dominated)
    if claim == "thm1.2":
        return [checks.check_first_mover_gap(_need_graph(req), dominated)]
    if claim == "lem1.1":
        sub = vertex_set(req.dominated_sub)
        return [checks.check_continuation(_need_graph(req), dominated, sub)]
    if claim in ("lem2.1", "cor2.3"):
        x = req.x if req.x is not None else 0
        return [
            checks.check_prevertex(
                _need_graph(req), dominated, x, whole_neighborhood=claim == "lem2.1"
            )
        ]
    if claim == "lem2.4":
        return [checks.check_pass_bound(_need_graph(req), req.p if req.p is not None else 1)]
    if claim in ("thm3.1", "cor3.2", "cor3.3"):
        reports = checks.check_main_theorem(_need_graph(req))
        if claim == "thm3.1":
            return reports
        return [r for r in reports if r.claim_id == claim]
    if claim == "thm4.1":
        if req.k is None:
            raise ValueError("claim thm4.1 needs --k")
        return checks.check_theorem4(_hx3_base(req), req.k)
    if claim in ("tn", "tn-family"):
        if req.n is None:
            raise ValueError("claim tn needs --n")
        return [checks.check_tn_family(req.n)]
    if claim in ("thm5.1", "eq2"):
        g = _need_graph(req)
        q = Fraction(*req.q) if req.q else Fraction(2, 3)
        cut, side = checks.find_theorem5_cut(g, q=q)
        return checks.check_theorem5(g, cut, q=q, big_side=side)
    if claim == "conj-traceable":
        return [checks.check_traceable_bound(_need_graph(req))]
    if claim == "suite":
        max_n = req.max_n if req.max_n is not None else 5
        seed = req.seed if req.seed is not None else suites.DEFAULT_SEED
        instances = list(suites.exhaustive_corpus(max_n))
        if req.random_count:
            instances.extend(suites.random_corpus(req.random_count, seed=seed))
        return list(suites.proved_theorem_suite(instances, seed=seed))
    raise ValueError(f"unknown claim {claim!r}; known: {', '.join(VERIFY_CLAIMS)}")


def handle_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    reports = verify_reports(req)
    return schemas.VerifyResponse(
        ok=verdict(reports), reports=[r.record() for r in reports]
    )


def _scan_instances(req: schemas.ScanRequest) -> Iterator[tuple[str, str]]:
    """(description, edge-list text) pairs, picklable for worker pools."""
    max_n = req.max_n or DEFAULT_MAX_VERTICES
    if req.family is not None:
        for desc, g in suites.family_range(req.family, req.lo or 0, req.hi or 0):
            yield desc, serialize_edge_list(g)
    for spec in req.constructs:
        lab = build(spec, max_n=max_n)
        yield spec, serialize_edge_list(lab.graph)


def _scan_one(item: tuple[str, str]) -> dict:
    desc, text = item
    g = parse_edge_list(text, max_n=64)
    return checks.check_traceable_bound(g, description=desc).record()


def handle_scan(req: schemas.ScanRequest) -> schemas.ScanResponse:
    items = list(_scan_instances(req))
    if req.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=req.jobs) as pool:
            records = list(pool.map(_scan_one, items))
    else:
        records = [_scan_one(item) for item in items]
    ok = all(r["holds"] for r in records)
    return schemas.ScanResponse(ok=ok, reports=records)
