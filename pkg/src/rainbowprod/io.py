"""Text formats: edge lists, product sidecars, colorings, DOT export.

Edge list::

    n m
    u v        # m lines, u < v, sorted

Coloring::

    colors <total>
    u v <color>   # one per edge, sorted, color like a3 / b1 / c / d
"""
from __future__ import annotations

from .graph import Color, EdgeColoring, Graph, GraphError, build_graph, edge_key
from .products import EdgeType, ProductGraph


class FormatError(ValueError):
    pass


def _data_lines(text: str) -> list[list[str]]:
    return [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 2:
        raise FormatError("edge list must start with 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise FormatError(f"non-integer entry in edge list: {exc}") from None
    if len(edges) != len(rows) - 1:
        raise FormatError("every edge line needs exactly two vertex ids")
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_pairs(p: ProductGraph) -> str:
    return "".join(f"{x} {g} {h}\n" for x, (g, h) in enumerate(p.pairs()))


def parse_pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for i, row in enumerate(_data_lines(text)):
        if len(row) != 3 or int(row[0]) != i:
            raise FormatError(f"bad pairs line {i}: {' '.join(row)}")
        out.append((int(row[1]), int(row[2])))
    return out


def format_types(p: ProductGraph) -> str:
    if p.edge_type is None:
        raise FormatError("only strong products carry edge types")
    return "".join(f"{u} {v} {p.edge_type[(u, v)].value}\n" for u, v in p.graph.edges())


def parse_types(text: str) -> dict[tuple[int, int], EdgeType]:
    return {edge_key(int(r[0]), int(r[1])): EdgeType(int(r[2])) for r in _data_lines(text)}


def format_coloring(c: EdgeColoring, total: int | None = None) -> str:
    total = c.num_colors if total is None else total
    lines = [f"colors {total}"]
    lines.extend(f"{u} {v} {c.assignment[(u, v)]}" for u, v in c.graph.edges())
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph) -> tuple[EdgeColoring, int]:
    """Parse a coloring of ``g``; returns the coloring and the declared total."""
    rows = _data_lines(text)
    if not rows or rows[0][0] != "colors" or len(rows[0]) != 2:
        raise FormatError("coloring must start with 'colors <total>'")
    total = int(rows[0][1])
    assignment = {}
    for r in rows[1:]:
        if len(r) != 3:
            raise FormatError(f"bad coloring line: {' '.join(r)}")
        e = edge_key(int(r[0]), int(r[1]))
        if not g.has_edge(*e):
            raise FormatError(f"colored pair {e} is not an edge of the graph")
        if e in assignment:
            raise FormatError(f"edge {e} colored twice")
        try:
            assignment[e] = Color.parse(r[2])
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    budget: dict[str, int] = {}
    for col in assignment.values():
        budget[col.palette] = max(budget.get(col.palette, 0), col.index)
    try:
        coloring = EdgeColoring(g, assignment, budget)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    return coloring, total


DOT_COLORS = {"A": "red", "B": "blue", "C": "darkgreen", "D": "orange", "c": "black", "d": "gray50"}


def format_dot(c: EdgeColoring, pairs: list[tuple[int, int]] | None = None) -> str:
    """Graphviz rendering for inspection; palettes map to fixed colors."""
    lines = ["graph rainbow {"]
    if pairs is not None:
        for x, (g, h) in enumerate(pairs):
            lines.append(f'  {x} [label="[{g},{h}]"];')
    for (u, v), col in sorted(c.assignment.items()):
        lines.append(f'  {u} -- {v} [color={DOT_COLORS[col.palette]}, label="{col}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
