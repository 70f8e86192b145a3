"""Command-line pipeline: gen, op, color, verify, rc.

Exit codes: 0 on success/PASS, 1 on FAIL, 2 on any error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io
from .colorings import color_operation
from .generators import generate
from .graph import EdgeColoring, Graph, GraphError, diameter, radius
from .products import ProductGraph, cartesian, lexicographic, power, strong
from .verifier import (
    DEFAULT_COLOR_CAP,
    ColorCapExceeded,
    SearchBudgetExceeded,
    brute_force_rc,
    is_rainbow_connected,
)

PRODUCTS = {"cartesian": cartesian, "lex": lexicographic, "strong": strong}


@dataclass(frozen=True)
class BoundReport:
    operation: str
    radius: int
    diameter: int
    colors: int
    budget: int
    verdict: str

    @property
    def ratio(self) -> float:
        return self.colors / self.diameter

    def lines(self) -> list[str]:
        return [
            f"operation {self.operation}",
            f"radius {self.radius}",
            f"diameter {self.diameter}",
            f"colors {self.colors}",
            f"budget {self.budget}",
            f"ratio {self.ratio:.4g}",
            f"verdict {self.verdict}",
        ]


def construction_budget(op: str, r: int) -> int:
    """Upper bound on colors guaranteed for the result of ``op`` with radius ``r``."""
    if op == "power":
        return 2 * r + 1
    if op == "cartesian":
        return 2 * r
    if op == "lex":
        return 2 * r if r >= 2 else 3
    if op == "strong":
        return 2 * r + 2
    raise GraphError(f"unknown operation {op!r}")


def bound_report(op: str, coloring: EdgeColoring, *, jobs: int = 1) -> BoundReport:
    g = coloring.graph
    r = radius(g)
    verdict = is_rainbow_connected(g, coloring, jobs=jobs).connected
    return BoundReport(op, r, diameter(g), coloring.num_colors, construction_budget(op, r), "PASS" if verdict else "FAIL")


def _read_graph(path: str) -> Graph:
    return io.parse_edge_list(Path(path).read_text())


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _split_operation(args) -> tuple[str, int | None, list[str]]:
    """``power K IN`` or ``<product> G H`` from the positional list."""
    op, rest = args.operation, list(args.inputs)
    if op == "power":
        if len(rest) != 2:
            raise GraphError("usage: power K GRAPH")
        return op, int(rest[0]), rest[1:]
    if op not in PRODUCTS:
        raise GraphError(f"unknown operation {op!r}")
    if len(rest) != 2:
        raise GraphError(f"usage: {op} G H")
    return op, None, rest


def cmd_gen(args) -> int:
    g = generate(args.family, args.params, seed=args.seed)
    _emit(io.format_edge_list(g), args.output)
    return 0


def _write_product(p: ProductGraph, out: str) -> None:
    Path(out).write_text(io.format_edge_list(p.graph))
    Path(out + ".pairs").write_text(io.format_pairs(p))
    if p.edge_type is not None:
        Path(out + ".types").write_text(io.format_types(p))


def cmd_op(args) -> int:
    op, k, inputs = _split_operation(args)
    graphs = [_read_graph(x) for x in inputs]
    if op == "power":
        _emit(io.format_edge_list(power(graphs[0], k)), args.output)
        return 0
    p = PRODUCTS[op](*graphs)
    if args.output is None:
        sys.stdout.write(io.format_edge_list(p.graph))
    else:
        _write_product(p, args.output)
    return 0


def cmd_color(args) -> int:
    op, k, inputs = _split_operation(args)
    graphs = [_read_graph(x) for x in inputs]
    coloring = color_operation(op, *graphs, k=k)
    _emit(io.format_coloring(coloring), args.output)
    if args.graph_out:
        if op == "power":
            Path(args.graph_out).write_text(io.format_edge_list(coloring.graph))
        else:
            _write_product(PRODUCTS[op](*graphs), args.graph_out)
    if args.dot:
        pairs = None if op == "power" else PRODUCTS[op](*graphs).pairs()
        Path(args.dot).write_text(io.format_dot(coloring, pairs))
    report = bound_report(op, coloring, jobs=args.jobs)
    out = sys.stderr if args.output is None else sys.stdout
    print("\n".join(report.lines()), file=out)
    return 0 if report.verdict == "PASS" else 1


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    coloring, _ = io.parse_coloring(Path(args.coloring).read_text(), g)
    report = is_rainbow_connected(g, coloring, cap=args.cap, jobs=args.jobs)
    print("\n".join(report.lines()))
    if args.dot:
        Path(args.dot).write_text(io.format_dot(coloring))
    return 0 if report.connected else 1


def cmd_rc(args) -> int:
    g = _read_graph(args.graph)
    rc = brute_force_rc(g, args.max, allow_large=args.allow_large)
    print(f"exceeds {args.max}" if rc is None else rc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowprod", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("op", help="build a power or product")
    p.add_argument("operation", help="power | cartesian | lex | strong")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", help="edge list; products also get .pairs/.types sidecars")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("color", help="color a power or product and report the bound")
    p.add_argument("operation", help="power | cartesian | lex | strong")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", help="coloring file")
    p.add_argument("--graph-out", help="write the colored graph (and sidecars) here")
    p.add_argument("--dot")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring for rainbow connectivity")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--cap", type=int, default=DEFAULT_COLOR_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--dot")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rc", help="exact rainbow connection number by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_rc)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, io.FormatError, ColorCapExceeded, SearchBudgetExceeded, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
