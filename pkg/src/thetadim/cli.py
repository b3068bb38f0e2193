"""Command-line interface.

Exit codes: 0 on success, 1 on domain errors (invalid parameters, a
non-resolving set reported by ``check``, disconnected or oversized
networks), 2 on usage and parse errors.  All structured output is
line-oriented and stable, so it can be pinned by golden-file tests.
"""

from __future__ import annotations

import argparse
import sys

from .closed_form import closed_form_basis, dimension_formula, dispatch_case
from .network import NetworkParseError, assign_landmarks, parse_network
from .resolve import (
    DEFAULT_ORACLE_CAP,
    is_minimal_resolving,
    is_resolving,
    metric_dimension_oracle,
    unresolved_pair,
)
from .sweep import emit_report, sweep
from .theta import build_c


def _vertex_set(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetadim",
        description="Metric dimension and landmark bases for theta graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("build", "print the edge list of C_{p,q,r}"),
        ("dim", "print the case-formula dimension and its case tag"),
        ("basis", "print the closed-form metric basis and its case tag"),
        ("check", "test whether a vertex set resolves C_{p,q,r}"),
    ):
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("p", type=int)
        cmd.add_argument("q", type=int)
        cmd.add_argument("r", type=int)
        if name == "dim":
            cmd.add_argument("--oracle", action="store_true",
                             help="also run the exhaustive oracle")
            cmd.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
        if name == "check":
            cmd.add_argument("--set", dest="vertex_set", type=_vertex_set, required=True,
                             metavar="V1,V2,...", help="landmark candidates")

    cmd = sub.add_parser("sweep", help="verify formulas against the oracle over a range")
    cmd.add_argument("--max-n", type=int, required=True)
    cmd.add_argument("--format", choices=("json", "csv"), default="json")
    cmd.add_argument("--out", help="write the report here instead of stdout")
    cmd.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)

    cmd = sub.add_parser("landmarks", help="assign landmark codes to a network file")
    cmd.add_argument("file", help="network description file")
    cmd.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    return parser


def _cmd_build(args) -> int:
    g = build_c(args.p, args.q, args.r)
    for u, v in sorted(g.edges):
        print(u, v)
    return 0


def _cmd_dim(args) -> int:
    case = dispatch_case(args.p, args.q, args.r)
    print(dimension_formula(args.p, args.q, args.r), case.tag)
    if args.oracle:
        result = metric_dimension_oracle(build_c(args.p, args.q, args.r), cap=args.oracle_cap)
        print("oracle", result.dimension)
    return 0


def _cmd_basis(args) -> int:
    result = closed_form_basis(args.p, args.q, args.r)
    print(",".join(map(str, result.basis)), result.case.tag)
    return 0


def _cmd_check(args) -> int:
    g = build_c(args.p, args.q, args.r)
    pair = unresolved_pair(g, args.vertex_set)
    if pair is not None:
        print("unresolved", pair[0], pair[1])
        return 1
    minimal = is_minimal_resolving(g, args.vertex_set)
    print("resolving", "minimal" if minimal else "non-minimal")
    return 0


def _cmd_sweep(args) -> int:
    report = sweep(args.max_n, oracle_cap=args.oracle_cap)
    text = emit_report(report, fmt=args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_landmarks(args) -> int:
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    spec = parse_network(text)
    table = assign_landmarks(spec, oracle_cap=args.oracle_cap)
    print("method", table.method, sep="\t")
    print("landmarks", *table.landmarks, sep="\t")
    for name in spec.nodes:
        print(name, ",".join(map(str, table.codes[name])), sep="\t")
    return 0


_HANDLERS = {
    "build": _cmd_build,
    "dim": _cmd_dim,
    "basis": _cmd_basis,
    "check": _cmd_check,
    "sweep": _cmd_sweep,
    "landmarks": _cmd_landmarks,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except NetworkParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
