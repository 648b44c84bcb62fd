"""Command-line front end.

Thin client over the service handlers (in process, no server needed):
each subcommand builds a request model, calls the handler, and formats the
response. Exit codes: 0 success / all claims hold, 1 a checked claim failed
(a falsified theorem means a solver bug), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .graphs import DEFAULT_MAX_VERTICES
from .service import handlers, schemas
from .verify.report import HYP_MARKER

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2


def _graph_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("file", nargs="?", help="edge-list file (first line 'n m', then edges)")
    sub.add_argument("--construct", metavar="SPEC",
                     help="constructor spec, e.g. cycle:6, tn:3, hx3:cycle:6, kkh:15:path:3")
    sub.add_argument("--max-n", type=int, default=None,
                     help=f"vertex cap (default {DEFAULT_MAX_VERTICES})")


def _graph_input(args: argparse.Namespace) -> schemas.GraphInput:
    if (args.file is None) == (args.construct is None):
        raise UsageError("provide an edge-list file or --construct SPEC (not both)")
    if args.construct is not None:
        return schemas.GraphInput(construct=args.construct, max_n=args.max_n)
    text = Path(args.file).read_text()
    return schemas.GraphInput(edge_list=text, max_n=args.max_n)


class UsageError(Exception):
    pass


def _parse_vertices(text: Optional[str]) -> list[int]:
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}; expected e.g. '0,2,5'") from None


def _write_json(path: Optional[str], records: list[dict]) -> None:
    if not path:
        return
    with open(path, "w") as fp:
        for rec in records:
            fp.write(json.dumps(rec))
            fp.write("\n")


def _print_reports(records: list[dict]) -> bool:
    ok = True
    for rec in records:
        hyp = HYP_MARKER in rec["claim_id"]
        if hyp:
            tag = "HYP OK" if rec["holds"] else "HYP FAIL"
        else:
            tag = "PASS" if rec["holds"] else "FAIL"
            ok = ok and rec["holds"]
        tight = " tight" if rec["tight"] else ""
        desc = rec["instance"].get("description", "")
        print(f"[{tag}] {rec['claim_id']} {desc}: lhs={rec['lhs']} rhs={rec['rhs']}{tight}")
    return ok


def _cmd_gamma(args: argparse.Namespace) -> int:
    req = schemas.GammaRequest(
        graph=_graph_input(args),
        variant=schemas.VariantInput(
            s_game=args.s_game,
            staller_passes=args.staller_passes,
            dominator_passes=args.dominator_passes,
        ),
        dominated=_parse_vertices(args.dominated),
        trace=args.trace,
    )
    resp = handlers.handle_gamma(req)
    print(f"{resp.label} = {resp.value}")
    if resp.trace is not None:
        for move in resp.trace:
            if move.vertex is None:
                print(f"{move.player} passes")
            else:
                print(f"{move.player} plays {move.vertex}")
    _write_json(args.json, [resp.model_dump()])
    return EXIT_OK


def _cmd_cuts(args: argparse.Namespace) -> int:
    resp = handlers.handle_cuts(schemas.CutsRequest(graph=_graph_input(args)))
    print(f"minimal edge cuts: {resp.count}")
    print(f"edge connectivity: {resp.edge_connectivity}")
    print(f"bridges: {' '.join(f'({u},{v})' for u, v in resp.bridges) or 'none'}")
    for cut in resp.cuts:
        edges = " ".join(f"({u},{v})" for u, v in cut.edges)
        print(f"size {cut.size}: {edges} | sides {cut.side_a} / {cut.side_b}")
    _write_json(args.json, [resp.model_dump()])
    return EXIT_OK


def _cmd_double_staller(args: argparse.Namespace) -> int:
    resp = handlers.handle_double_staller(
        schemas.DoubleStallerRequest(graph=_graph_input(args))
    )
    flag = "true" if resp.is_double_staller else "false"
    print(f"is_double_staller = {flag} (gamma_g = {resp.gamma}, net = {resp.net_value})")
    _write_json(args.json, [resp.model_dump()])
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    resp = handlers.handle_construct(
        schemas.ConstructRequest(spec=args.spec, max_n=args.max_n)
    )
    sys.stdout.write(resp.edge_list)
    if resp.marks:
        marks = " ".join(f"{k}={v}" for k, v in sorted(resp.marks.items()))
        print(f"marks: {marks}", file=sys.stderr)
    _write_json(args.json, [resp.model_dump()])
    return EXIT_OK


def _parse_q(text: Optional[str]) -> Optional[tuple[int, int]]:
    if text is None:
        return None
    num, sep, den = text.partition("/")
    if not sep:
        raise UsageError(f"bad ratio {text!r}: expected NUM/DEN")
    try:
        return int(num), int(den)
    except ValueError:
        raise UsageError(f"bad ratio {text!r}: expected NUM/DEN") from None


def _cmd_verify(args: argparse.Namespace) -> int:
    graph = None
    if args.file is not None or args.construct is not None:
        graph = _graph_input(args)
    req = schemas.VerifyRequest(
        claim=args.claim,
        graph=graph,
        dominated=_parse_vertices(args.dominated),
        dominated_sub=_parse_vertices(args.dominated_sub),
        x=args.x,
        p=args.staller_passes,
        k=args.k,
        n=args.n,
        q=_parse_q(args.q),
        max_n=args.max_n,
        random_count=args.random_count,
        seed=args.seed,
    )
    resp = handlers.handle_verify(req)
    ok = _print_reports(resp.reports)
    _write_json(args.json, resp.reports)
    print("ok" if resp.ok else "FALSIFIED: a checked claim failed; see records above")
    return EXIT_OK if resp.ok and ok else EXIT_FALSIFIED


def _cmd_scan(args: argparse.Namespace) -> int:
    req = schemas.ScanRequest(
        family=args.family,
        lo=args.lo,
        hi=args.hi,
        constructs=args.construct or [],
        jobs=args.jobs,
        max_n=args.max_n,
    )
    resp = handlers.handle_scan(req)
    ok = _print_reports(resp.reports)
    _write_json(args.json, resp.reports)
    print("ok" if resp.ok else "VIOLATION: bound exceeded; see records above")
    return EXIT_OK if resp.ok and ok else EXIT_FALSIFIED


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domgame",
        description="Exact domination-game values, minimal edge cuts, and claim checks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gamma", help="game value of an instance")
    _graph_args(p)
    p.add_argument("--s-game", action="store_true", help="Staller moves first")
    p.add_argument("--staller-passes", type=int, default=0, metavar="P")
    p.add_argument("--dominator-passes", type=int, default=0, metavar="P")
    p.add_argument("--dominated", metavar="V1,V2,...", help="predominated vertices")
    p.add_argument("--trace", action="store_true", help="print one optimal line")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_gamma)

    p = subs.add_parser("cuts", help="minimal edge cuts, connectivity, bridges")
    _graph_args(p)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_cuts)

    p = subs.add_parser("double-staller", help="test the two-sided stalling property")
    _graph_args(p)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_double_staller)

    p = subs.add_parser("construct", help="emit a family instance as edge-list text")
    p.add_argument("spec", help="constructor spec, e.g. tn:3 or kkh:15:path:3")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_construct)

    p = subs.add_parser("verify", help="run a claim checker on an instance")
    p.add_argument("claim", help=f"one of: {', '.join(handlers.VERIFY_CLAIMS)}")
    _graph_args(p)
    p.add_argument("--dominated", metavar="V1,V2,...")
    p.add_argument("--dominated-sub", metavar="V1,V2,...",
                   help="the smaller dominated set for lem1.1")
    p.add_argument("--x", type=int, default=None, help="vertex for lem2.1/cor2.3")
    p.add_argument("--staller-passes", type=int, default=None, metavar="P",
                   help="pass budget for lem2.4")
    p.add_argument("--k", type=int, default=None, help="target parameter for thm4.1")
    p.add_argument("--n", type=int, default=None, help="family index for tn")
    p.add_argument("--q", metavar="NUM/DEN", default=None,
                   help="small-side ratio for thm5.1 (default 2/3)")
    p.add_argument("--random-count", type=int, default=0,
                   help="extra random instances for the suite claim")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("scan", help="check gamma_g <= ceil(n/2) over instances")
    p.add_argument("--family", choices=("path", "cycle"))
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    p.add_argument("--construct", action="append", metavar="SPEC",
                   help="extra instance (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_scan)

    p = subs.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
