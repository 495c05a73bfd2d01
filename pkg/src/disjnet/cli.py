"""``disjnet`` command line: analyze, verify, construct.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from disjnet.errors import DisjnetError, InputError, OracleMismatch, ResourceError
from disjnet.families import FAMILIES, parse_family_spec
from disjnet.io import format_edge_list, read_edge_list, to_dot
from disjnet.limits import ENUMERATION_CAP, ORACLE_CAP
from disjnet.ranks import construct_disjunctive_with_rank
from disjnet.report import analyze
from disjnet.sampling import DEFAULT_SEED
from disjnet.verify import SUITES, SuiteResult, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="disjnet", description="Exact analysis of disjunctive Boolean networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="ranks, point sets and classifications of one graph")
    p.add_argument("path", nargs="?", help="edge-list file (first line n, then 'i j' per arc)")
    p.add_argument("--family", help="family spec instead of a file, e.g. 'b:1,1+cycle:2'")
    p.add_argument("--oracle", action="store_true", help="cross-check every fast path by brute force")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--full", action="store_true", help="print large point sets in full")
    p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP, help=f"largest n for 2**n state scans (default {ORACLE_CAP})")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("verify", help="run one theorem's property suite")
    p.add_argument("theorem", choices=list(SUITES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=None, help="sample count for randomised suites")
    p.add_argument("--workers", type=int, default=1, help="processes for exhaustive digraph scans")
    p.add_argument("--enum-cap", type=int, default=ENUMERATION_CAP, help=f"largest n for all-digraph scans (default {ENUMERATION_CAP})")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("construct", help="emit a family graph or a graph of prescribed rank")
    p.add_argument("--family", help=f"family spec; families: {', '.join(FAMILIES)}")
    p.add_argument("--rank", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--dot", action="store_true", help="DOT instead of an edge list")
    return parser


def _cmd_analyze(args: argparse.Namespace) -> int:
    if (args.path is None) == (args.family is None):
        raise InputError("analyze needs exactly one of a path or --family")
    g = read_edge_list(args.path) if args.path else parse_family_spec(args.family)
    report = analyze(g, oracle=args.oracle, full=args.full, oracle_cap=args.oracle_cap, seed=args.seed)
    print(report.to_json() if args.json else report.render())
    if args.oracle and not all(report.oracle["agreement"].values()):
        return EXIT_FAILED
    return EXIT_OK


def _render_suite(result: SuiteResult) -> str:
    status = "PASS" if result.passed else "FAIL"
    lines = [f"{status} {result.theorem} n={result.n} checked={result.checked} ({result.seconds:.2f}s)"]
    for key, value in result.details.items():
        lines.append(f"  {key}: {value}")
    lines.extend(f"  counterexample: {c}" for c in result.counterexamples)
    return "\n".join(lines)


def _cmd_verify(args: argparse.Namespace) -> int:
    result = run_suite(
        args.theorem, args.n, seed=args.seed, samples=args.samples, workers=args.workers, enum_cap=args.enum_cap
    )
    print(json.dumps(result.to_dict(), indent=2, default=str) if args.json else _render_suite(result))
    return EXIT_OK if result.passed else EXIT_FAILED


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family is not None:
        if args.rank is not None:
            raise InputError("use either --family or --rank/--n, not both")
        g = parse_family_spec(args.family)
    elif args.rank is not None and args.n is not None:
        g = construct_disjunctive_with_rank(args.n, args.rank)
    else:
        raise InputError("construct needs --family, or --rank together with --n")
    sys.stdout.write(to_dot(g) if args.dot else format_edge_list(g))
    return EXIT_OK


COMMANDS = {"analyze": _cmd_analyze, "verify": _cmd_verify, "construct": _cmd_construct}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OracleMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (InputError, ResourceError, DisjnetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
