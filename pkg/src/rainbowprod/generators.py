"""Small graph families used throughout the tests and demos."""
from __future__ import annotations

import random

from .graph import Graph, GraphError, build_graph, is_connected


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the hub at vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def random_connected(n: int, p: float, seed: int | None = None, *, max_tries: int = 10_000) -> Graph:
    """G(n, p) resampled until connected. Deterministic for a fixed seed."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise GraphError("random-connected needs n >= 1 and 0 <= p <= 1")
    if n > 1 and p == 0.0:
        raise GraphError("p = 0 never yields a connected graph")
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if is_connected(g):
            return g
    raise GraphError(f"no connected sample after {max_tries} tries; increase p")


def random_tree(n: int, seed: int | None = None) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [(i, rng.randrange(i)) for i in range(1, n)])


def random_radius_one(n: int, p: float, seed: int | None = None) -> Graph:
    """Vertex 0 is universal; other pairs are joined with probability ``p``."""
    rng = random.Random(seed)
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, j) for i in range(1, n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


FAMILIES = {
    "path": (path_graph, (int,)),
    "cycle": (cycle_graph, (int,)),
    "star": (star_graph, (int,)),
    "complete": (complete_graph, (int,)),
    "grid": (grid_graph, (int, int)),
    "random-connected": (random_connected, (int, float)),
}


def generate(family: str, params: list[str], seed: int | None = None) -> Graph:
    """Build a family member from string parameters, as the CLI receives them."""
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    fn, types = FAMILIES[family]
    if len(params) != len(types):
        raise GraphError(f"{family} takes {len(types)} parameter(s), got {len(params)}")
    try:
        args = [t(x) for t, x in zip(types, params)]
    except ValueError as exc:
        raise GraphError(f"bad parameter for {family}: {exc}") from None
    if family == "random-connected":
        return fn(*args, seed=seed)
    return fn(*args)
