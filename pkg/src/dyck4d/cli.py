"""Command-line front end: every library capability behind one executable.

Exit codes: 0 success, 1 domain or validation error (including usage
errors), 2 resource limit.  All numeric output is exact decimal.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .coords import Plane, is_reachable, node_from
from .dynamics import build_table, catalan, table_to_csv, table_to_json
from .errors import DyckError, ResourceLimit
from .identities import decompose_catalan
from .paths import enumerate_words, format_word, parse_word, project_path, trace
from .render import DiagramSpec, emit, layout
from .verify import run_checks

_CLI_PLANES = ("ij", "nj", "nk", "in", "kj", "ik")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="dyck4d",
        description="Exact path-count tables, Catalan identities, and diagrams "
        "over the four-coordinate lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalan", help="print the N-th Catalan number")
    p.add_argument("n", type=int)

    p = sub.add_parser("table", help="export the count table")
    p.add_argument("--max-i", type=int, required=True, dest="max_i")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("dynamics", help="print the count at (I, J) and the full node")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)

    p = sub.add_parser("decompose", help="squares decomposition of column V")
    p.add_argument("v", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.add_argument("--max-i", type=int, required=True, dest="max_i")

    p = sub.add_parser("project", help="project a word's path onto a plane")
    p.add_argument("--plane", required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("enumerate", help="list all complete words of semilength M")
    p.add_argument("m", type=int)

    p = sub.add_parser("render", help="draw a diagram of a planar view")
    p.add_argument("--plane", required=True)
    p.add_argument("--max-i", type=int, required=True, dest="max_i")
    p.add_argument("--word")
    p.add_argument("--svg", metavar="PATH", help="write SVG here instead of text to stdout")
    p.add_argument("--isolines", default="ijnk", help="families to draw, e.g. 'nk'")

    return parser


def _parse_plane(text: str) -> Plane:
    name = text.strip().lower()
    if name not in _CLI_PLANES:
        raise _UsageError(
            f"unknown plane {text!r}; expected one of {', '.join(_CLI_PLANES)}"
        )
    return Plane.parse(name)


def _cmd_dynamics(args, out: TextIO) -> int:
    if not is_reachable(args.i, args.j):
        print("0 (unreachable)", file=out)
        return 0
    table = build_table(args.i)
    node = node_from(Plane.parse("ij"), args.i, args.j)
    value = table.count_node(node)
    print(f"{value} (i={node.i}, j={node.j}, n={node.n}, k={node.k})", file=out)
    return 0


def _cmd_decompose(args, out: TextIO) -> int:
    dec = decompose_catalan(args.v)
    if args.json:
        out.write(json.dumps(dec.to_json_dict(), indent=2) + "\n")
        return 0
    total = dec.sum_of_squares
    expected = catalan(args.v)
    print("terms: " + ",".join(str(t) for t in dec.terms), file=out)
    print(f"sum-of-squares: {total}", file=out)
    print(f"status: {'OK' if total == expected else 'MISMATCH'}", file=out)
    return 0 if total == expected else 1


def _cmd_verify(args, out: TextIO) -> int:
    results = run_checks(args.max_i)
    failures = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        if not result.passed:
            failures += 1
        print(f"{status} {result.name}: {result.detail}", file=out)
    print(f"{len(results) - failures}/{len(results)} checks passed", file=out)
    return 0 if failures == 0 else 1


def _cmd_project(args, out: TextIO) -> int:
    plane = _parse_plane(args.plane)
    projected = project_path(trace(parse_word(args.word)), plane)
    print(f"plane: {plane.name}", file=out)
    x, y = projected.points[0]
    print(f"start: ({x},{y})", file=out)
    for move, (x, y) in zip(projected.moves, projected.points[1:]):
        dx, dy = move.delta
        print(f"{move.step} {move.kind} ({dx:+d},{dy:+d}) -> ({x},{y})", file=out)
    return 0


def _cmd_render(args, out: TextIO) -> int:
    spec = DiagramSpec(
        plane=_parse_plane(args.plane),
        max_i=args.max_i,
        isolines=frozenset(args.isolines.lower()),
        word=parse_word(args.word) if args.word else None,
        fmt="svg" if args.svg else "text",
    )
    document = emit(layout(spec))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8", newline="") as handle:
            handle.write(document)
    else:
        out.write(document)
    return 0


def _dispatch(args, out: TextIO) -> int:
    if args.command == "catalan":
        if args.n < 0:
            raise _UsageError(f"n must be nonnegative, got {args.n}")
        print(catalan(args.n), file=out)
        return 0
    if args.command == "table":
        table = build_table(args.max_i)
        out.write(table_to_csv(table) if args.format == "csv" else table_to_json(table))
        return 0
    if args.command == "dynamics":
        return _cmd_dynamics(args, out)
    if args.command == "decompose":
        return _cmd_decompose(args, out)
    if args.command == "verify":
        return _cmd_verify(args, out)
    if args.command == "project":
        return _cmd_project(args, out)
    if args.command == "enumerate":
        for word in enumerate_words(args.m):
            print(format_word(word), file=out)
        return 0
    if args.command == "render":
        return _cmd_render(args, out)
    raise _UsageError(f"unknown command {args.command!r}")


def run(argv: Sequence[str] | None = None, *, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    """Parse arguments, run one command, and return the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=err)
        return 2
    except (DyckError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except SystemExit as exc:  # argparse --help
        return 0 if exc.code is None else int(exc.code)


def main() -> None:
    sys.exit(run(sys.argv[1:]))
