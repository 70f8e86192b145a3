"""Exact rainbow-connectivity checks and a brute-force rc oracle.

The connectivity check explores states ``(vertex, set of colors used)``
from each source. A state is dropped when the same vertex was already
reached with a subset of its colors, so the explored walks are always
simple paths.
"""
from __future__ import annotations

import os
import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Hashable, Iterable, Mapping, Sequence

from .graph import INF, EdgeColoring, Graph, GraphError, distances_from, edge_key, is_connected

if TYPE_CHECKING:
    from .colorings import StrongScaffold

DEFAULT_COLOR_CAP = 24
DEFAULT_SEARCH_CAP = 10**7
BRUTE_FORCE_EDGE_LIMIT = 30


class ColorCapExceeded(RuntimeError):
    """More distinct colors than the state-space cap allows."""


class SearchBudgetExceeded(RuntimeError):
    """The coloring search hit its node cap; retry with a larger cap."""


def search_cap_from_env(default: int = DEFAULT_SEARCH_CAP) -> int:
    value = os.environ.get("RAINBOW_SEARCH_CAP")
    return int(value) if value else default


@dataclass(frozen=True)
class WitnessReport:
    connected: bool
    failing_pairs: tuple[tuple[int, int], ...]
    witness: Mapping[tuple[int, int], tuple[int, ...]] | None = field(default=None, repr=False)

    def lines(self) -> list[str]:
        out = ["PASS" if self.connected else "FAIL"]
        out.extend(f"{u} {v}" for u, v in self.failing_pairs)
        return out


def _assignment(coloring: EdgeColoring | Mapping[tuple[int, int], Hashable]) -> Mapping:
    if isinstance(coloring, EdgeColoring):
        return coloring.assignment
    return {edge_key(*e): c for e, c in coloring.items()}


def _bit_adjacency(g: Graph, coloring, cap: int | None) -> tuple[list[list[tuple[int, int]]], dict]:
    """Adjacency with one color bit per edge, plus the color -> bit map."""
    assignment = _assignment(coloring)
    if len(assignment) != g.m or any(e not in assignment for e in g.edges()):
        raise GraphError("coloring must be total over the graph's edges")
    try:
        colors = sorted(set(assignment.values()))
    except TypeError:
        colors = sorted(set(assignment.values()), key=repr)
    if cap is not None and len(colors) > cap:
        raise ColorCapExceeded(
            f"{len(colors)} distinct colors exceed the cap of {cap}; raise the cap explicitly"
        )
    bit_of = {c: 1 << i for i, c in enumerate(colors)}
    nbrs = [
        [(w, bit_of[assignment[edge_key(v, w)]]) for w in g.adjacency[v]]
        for v in range(g.n)
    ]
    return nbrs, bit_of


def _search(nbrs, source: int, targets: Iterable[int], allowed: int = -1, want_paths: bool = False):
    """Rainbow search from ``source``; returns ``{target: path or None}`` for reached targets.

    Frontier is expanded layer by layer with vertices and masks in sorted
    order, so witnesses are shortest rainbow paths and reproducible.
    """
    remaining = set(targets)
    reached: dict[int, tuple[int, ...] | None] = {}
    if source in remaining:
        remaining.discard(source)
        reached[source] = (source,)
    minimal: dict[int, list[int]] = {source: [0]}
    back: dict[tuple[int, int], tuple[int, int]] = {}
    frontier = [(source, 0)]
    while frontier and remaining:
        nxt = []
        for v, used in frontier:
            if used not in minimal[v]:
                continue
            for w, bit in nbrs[v]:
                if bit & used or not bit & allowed:
                    continue
                mask = used | bit
                known = minimal.get(w)
                if known is None:
                    minimal[w] = [mask]
                else:
                    if any(m & mask == m for m in known):
                        continue
                    minimal[w] = [m for m in known if m & mask != mask]
                    minimal[w].append(mask)
                if want_paths:
                    back[(w, mask)] = (v, used)
                nxt.append((w, mask))
                if w in remaining:
                    remaining.discard(w)
                    reached[w] = _unwind(back, source, w, mask) if want_paths else None
        nxt.sort()
        frontier = nxt
    return reached


def _unwind(back, source: int, v: int, mask: int) -> tuple[int, ...]:
    path = [v]
    state = (v, mask)
    while state[0] != source or state[1] != 0:
        state = back[state]
        path.append(state[0])
    return tuple(reversed(path))


def _source_job(args):
    nbrs, source, targets, want_paths = args
    return source, _search(nbrs, source, targets, want_paths=want_paths)


def is_rainbow_connected(
    g: Graph,
    coloring: EdgeColoring | Mapping[tuple[int, int], Hashable],
    *,
    cap: int | None = DEFAULT_COLOR_CAP,
    witnesses: bool = False,
    jobs: int = 1,
) -> WitnessReport:
    """Decide whether every vertex pair of ``g`` has a rainbow path.

    Parameters
    ----------
    cap :
        Maximum number of distinct colors accepted; ``None`` disables it.
    witnesses :
        Also return one rainbow path per connected pair.
    jobs :
        Worker processes for the per-source searches.
    """
    nbrs, _ = _bit_adjacency(g, coloring, cap)
    tasks = []
    for s in range(g.n):
        if witnesses:
            targets = [t for t in range(s + 1, g.n)]
        else:
            targets = [t for t in range(s + 1, g.n) if not g.has_edge(s, t)]
        if targets:
            tasks.append((nbrs, s, targets, witnesses))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_source_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_source_job(t) for t in tasks]
    failing = []
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for (_, s, targets, _), (_, reached) in zip(tasks, results):
        for t in targets:
            if t in reached:
                if witnesses:
                    paths[(s, t)] = reached[t]
            else:
                failing.append((s, t))
    failing.sort()
    return WitnessReport(not failing, tuple(failing), paths if witnesses else None)


def rainbow_witness_restricted(
    g: Graph,
    coloring: EdgeColoring | Mapping[tuple[int, int], Hashable],
    u: int,
    v: int,
    allowed: Iterable[Hashable],
    *,
    cap: int | None = DEFAULT_COLOR_CAP,
) -> tuple[int, ...] | None:
    """A rainbow ``u``-``v`` path using only colors in ``allowed``, or ``None``."""
    nbrs, bit_of = _bit_adjacency(g, coloring, cap)
    mask = 0
    for c in allowed:
        mask |= bit_of.get(c, 0)
    return _search(nbrs, u, [v], allowed=mask, want_paths=True).get(v)


def rainbow_reachable_set(
    g: Graph,
    coloring: EdgeColoring | Mapping[tuple[int, int], Hashable],
    source: int,
    allowed: Iterable[Hashable],
    *,
    cap: int | None = DEFAULT_COLOR_CAP,
) -> set[int]:
    """Vertices joined to ``source`` by a rainbow path over ``allowed`` colors."""
    nbrs, bit_of = _bit_adjacency(g, coloring, cap)
    mask = 0
    for c in allowed:
        mask |= bit_of.get(c, 0)
    return set(_search(nbrs, source, range(g.n), allowed=mask))


# ---------------------------------------------------------------------------
# exhaustive coloring search


class _PathIndex:
    """All short simple paths between non-adjacent pairs, indexed by edge."""

    def __init__(self, g: Graph, k: int):
        self.edges = g.edges()
        eid = {e: i for i, e in enumerate(self.edges)}
        self.pair_of_path: list[int] = []
        self.path_edges: list[tuple[int, ...]] = []
        self.pairs: list[tuple[int, int]] = []
        self.infeasible = False
        pair_id: dict[tuple[int, int], int] = {}
        for s in range(g.n):
            for t in range(s + 1, g.n):
                if not g.has_edge(s, t):
                    pair_id[(s, t)] = len(self.pairs)
                    self.pairs.append((s, t))
        count = [0] * len(self.pairs)

        def extend(start: int, v: int, seen: list[int], used: list[int]):
            for w in g.adjacency[v]:
                if w in seen:
                    continue
                used.append(eid[edge_key(v, w)])
                if w > start and (start, w) in pair_id and len(used) >= 2:
                    p = pair_id[(start, w)]
                    self.pair_of_path.append(p)
                    self.path_edges.append(tuple(used))
                    count[p] += 1
                if len(used) < k:
                    seen.append(w)
                    extend(start, w, seen, used)
                    seen.pop()
                used.pop()

        if k >= 2:
            for s in range(g.n):
                extend(s, s, [s], [])
        self.alive_init = count
        self.infeasible = any(c == 0 for c in count)
        self.paths_of_edge: list[list[int]] = [[] for _ in self.edges]
        for p, es in enumerate(self.path_edges):
            for e in es:
                self.paths_of_edge[e].append(p)


def _edge_order(g: Graph, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Edges ordered so that pairs near each other get fully colored early."""
    dist = distances_from(g, 0)
    pos = sorted(range(g.n), key=lambda v: (dist[v], v))
    rank = {v: i for i, v in enumerate(pos)}
    return sorted(range(len(edges)), key=lambda i: (max(rank[edges[i][0]], rank[edges[i][1]]),
                                                     min(rank[edges[i][0]], rank[edges[i][1]])))


def find_rainbow_coloring(
    g: Graph,
    k: int,
    *,
    node_cap: int | None = None,
    seed: int | None = None,
) -> dict[tuple[int, int], int] | None:
    """Search for a rainbow coloring of ``g`` with colors ``0..k-1``.

    Colorings are enumerated up to renaming of colors (each edge may use at
    most one color beyond those already used). A pair is abandoned as soon
    as every path of length ``<= k`` between its endpoints repeats a color.

    Returns the coloring, or ``None`` when none exists. Raises
    :class:`SearchBudgetExceeded` after ``node_cap`` assignments. With a
    ``seed`` the value order is shuffled deterministically, which tends to
    find solutions faster; the search stays exhaustive.
    """
    if g.n <= 1:
        return {}
    if not is_connected(g) or k < 1:
        return None
    if k < max(max(distances_from(g, v)) for v in range(g.n)):
        return None
    index = _PathIndex(g, k)
    if index.infeasible:
        return None
    edges = index.edges
    order = _edge_order(g, edges)
    color = [-1] * len(edges)
    dead = [0] * len(index.path_edges)
    alive = list(index.alive_init)
    rng = random.Random(seed) if seed is not None else None
    cap = node_cap if node_cap is not None else search_cap_from_env()
    nodes = 0
    path_edges, paths_of_edge, pair_of_path = index.path_edges, index.paths_of_edge, index.pair_of_path

    def assign(e: int, c: int, trail: list[tuple[int, int]]) -> bool:
        ok = True
        for p in paths_of_edge[e]:
            hits = 0
            for f in path_edges[p]:
                if color[f] == c and f != e:
                    hits += 1
            if hits:
                if dead[p] == 0:
                    q = pair_of_path[p]
                    alive[q] -= 1
                    if alive[q] == 0:
                        ok = False
                dead[p] += hits
                trail.append((p, hits))
        color[e] = c
        return ok

    def undo(e: int, trail: list[tuple[int, int]]):
        for p, hits in reversed(trail):
            dead[p] -= hits
            if dead[p] == 0:
                alive[pair_of_path[p]] += 1
        color[e] = -1

    def rec(pos: int, top: int) -> bool:
        nonlocal nodes
        if pos == len(order):
            return True
        e = order[pos]
        candidates = list(range(min(top + 1, k - 1) + 1))
        if rng is not None:
            rng.shuffle(candidates)
        for c in candidates:
            nodes += 1
            if nodes > cap:
                raise SearchBudgetExceeded(f"coloring search exceeded {cap} nodes")
            trail: list[tuple[int, int]] = []
            if assign(e, c, trail) and rec(pos + 1, max(top, c)):
                return True
            undo(e, trail)
        return False

    if rec(0, -1):
        return {edges[i]: color[i] for i in range(len(edges))}
    return None


def brute_force_rc(
    g: Graph,
    max_colors: int,
    *,
    allow_large: bool = False,
    node_cap: int | None = None,
) -> int | None:
    """Exact rainbow connection number, or ``None`` if it exceeds ``max_colors``.

    Starts at the diameter. Refuses graphs with more than 30 edges once three
    or more colors are needed unless ``allow_large`` is set.
    """
    if not is_connected(g):
        raise GraphError("rainbow connection number needs a connected graph")
    if g.n == 1:
        return 0
    diam = max(int(max(distances_from(g, v))) for v in range(g.n))
    for k in range(diam, max_colors + 1):
        if k >= 3 and g.m > BRUTE_FORCE_EDGE_LIMIT and not allow_large:
            raise GraphError(
                f"{g.m} edges is too many for an exhaustive search at {k} colors; pass allow_large=True"
            )
        if find_rainbow_coloring(g, k, node_cap=node_cap) is not None:
            return k
    return None


def strong_reachability_classes(scaffold: "StrongScaffold") -> tuple[set[int], set[int]]:
    """The A- and B-reachable vertex classes, by the ``(y, z)`` level class of each vertex."""
    r_a: set[int] = set()
    r_b: set[int] = set()
    for x, (y, z) in scaffold.level_class.items():
        if y == 0 or (1 <= y <= z and (z - y) % 2 == 0) or (y >= 2 and z == 0) or (2 <= z < y and z % 2 == 0):
            r_a.add(x)
        if y == 1 or (2 <= y <= z and (z - y) % 2 == 1) or (z < y and z % 2 == 1):
            r_b.add(x)
    return r_a, r_b
