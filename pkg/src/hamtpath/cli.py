"""Command-line front end: ``hamtpath gen|reduce|oracle|prune|lp|search``.

Structured output is JSON on stdout, summaries go to stderr.  Exit codes:
0 yes/success, 1 no, 2 usage or input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .lp import build_lp, solve_feasibility, verify_certificate
from .oracle import DEFAULT_ORDER_CAP, enumerate_htps
from .pruning import Decision, prune, prune_single_pass
from .reduction import parse_digraph, reduce_hampath
from .search import FIXTURES, GeneratorSpec, random_subgraph, run_campaign, write_findings
from .timegraph import (
    EdgeId,
    TimeGraphError,
    complete_time_graph,
    parse_timegraph,
    serialize_timegraph,
)

YES, NO, USAGE, INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _emit(args, payload: dict) -> None:
    if args.json_pretty:
        text = json.dumps(payload, indent=2)
    else:
        text = json.dumps(payload, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _edge_list(text: str) -> list[EdgeId]:
    """Parse ``"i j t,i j t,..."`` into edges."""
    return [EdgeId(*map(int, item.split())) for item in text.split(",") if item.strip()]


def cmd_gen(args) -> int:
    if args.kind == "complete":
        if args.n is None:
            raise TimeGraphError("gen complete needs n")
        g = complete_time_graph(args.n)
    elif args.kind == "random":
        if args.n is None or args.p is None:
            raise TimeGraphError("gen random needs n and p")
        if not 0.0 <= args.p <= 1.0:
            raise TimeGraphError(f"edge probability must lie in [0, 1], got {args.p}")
        g = random_subgraph(args.n, args.p, args.seed)
    else:
        name = args.fixture or (str(args.n) if args.n is not None else None)
        if name not in FIXTURES:
            raise TimeGraphError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}")
        g = FIXTURES[name]()
    sys.stdout.write(serialize_timegraph(g))
    return YES


def cmd_reduce(args) -> int:
    sys.stdout.write(serialize_timegraph(reduce_hampath(parse_digraph(_read(args.file)))))
    return YES


def cmd_oracle(args) -> int:
    res = enumerate_htps(parse_timegraph(_read(args.file)), cap=args.cap)
    _emit(args, res.to_json())
    print(f"{res.htp_count} Hamiltonian time path(s)", file=sys.stderr)
    return YES if res.htp_count else NO


def cmd_prune(args) -> int:
    g = parse_timegraph(_read(args.file))
    if args.single_pass is not None:
        order = _edge_list(args.single_pass) if args.single_pass else None
        report = prune_single_pass(g, order)
    else:
        report = prune(g)
    _emit(args, report.to_json(trace=args.trace))
    print(f"{report.decision.value}: {len(report.removals)} removal(s), "
          f"{report.lp_calls} LP call(s)", file=sys.stderr)
    return YES if report.decision is Decision.HAMILTONIAN else NO


def cmd_lp(args) -> int:
    g = parse_timegraph(_read(args.file))
    lp = build_lp(g, EdgeId(args.i, args.j, args.t))
    result = solve_feasibility(lp)
    payload = result.to_json()
    if args.dump:
        payload["instance"] = lp.to_json()
    if not verify_certificate(lp, result):
        print("certificate failed self-verification", file=sys.stderr)
        _emit(args, payload)
        return INTERNAL
    _emit(args, payload)
    return YES if result.feasible else NO


def cmd_search(args) -> int:
    if args.spec:
        spec = GeneratorSpec.from_json(json.loads(_read(args.spec)))
    else:
        if args.kind is None or args.n is None:
            raise TimeGraphError("search needs --spec or --kind and --n")
        spec = GeneratorSpec(args.kind, args.n, args.p, args.seed, args.count, tuple(args.fixture))
    report = run_campaign(spec, cap=args.cap, workers=args.workers)
    if args.out_dir and report.discrepancies:
        write_findings(report, args.out_dir)
    _emit(args, report.to_json(timing=not args.no_timing))
    print(f"{report.instances} instance(s), tallies {report.tallies}", file=sys.stderr)
    return INTERNAL if report.defect_count else YES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-pretty", action="store_true", help="indent JSON output")
    common.add_argument("--trace", action="store_true", help="include per-LP-call trace")
    common.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="oracle order cap")

    parser = argparse.ArgumentParser(prog="hamtpath", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit a time-graph file")
    p.add_argument("kind", choices=["complete", "random", "fixture"])
    p.add_argument("n", nargs="?", help="order, or fixture name for 'fixture'")
    p.add_argument("p", nargs="?", type=float, help="edge probability for 'random'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fixture", help="fixture name, e.g. paper-s5")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", parents=[common], help="reduce a digraph file to a time graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", parents=[common], help="enumerate Hamiltonian time paths")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("prune", parents=[common], help="run useless-edge pruning")
    p.add_argument("file")
    p.add_argument("--single-pass", nargs="?", const="", default=None, metavar="ORDER",
                   help="one pass without restarts; ORDER is 'i j t,i j t,...' (default canonical)")
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("lp", parents=[common], help="decide LP feasibility for one edge")
    p.add_argument("file")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--dump", action="store_true", help="include the LP instance in the output")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("search", parents=[common], help="run a falsification campaign")
    p.add_argument("--spec", help="JSON spec file")
    p.add_argument("--kind", choices=["random-subgraph", "random-digraph", "exhaustive-tiny"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--fixture", action="append", default=[])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out-dir", help="directory for findings")
    p.add_argument("--no-timing", action="store_true", help="omit wall_time for byte-stable output")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else YES
    if args.command == "gen" and args.kind in ("complete", "random") and args.n is not None:
        try:
            args.n = int(args.n)
        except ValueError:
            print(f"error: order must be an integer, got {args.n!r}", file=sys.stderr)
            return USAGE
    try:
        return args.func(args)
    except (TimeGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
