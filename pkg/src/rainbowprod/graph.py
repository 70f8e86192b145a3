"""Graphs, BFS machinery, rooted trees and layer-wise tree colorings.

Everything here is immutable after construction. Vertex ids are dense
integers ``0..n-1`` and edges are stored as ``(u, v)`` tuples with ``u < v``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or inputs violating a precondition."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match n")
        for u, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of {u} is not sorted and duplicate-free")
            for v in nbrs:
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
        # symmetry is checked pairwise once; cheap for the sizes we handle
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u not in self._nbr_sets[v]:
                    raise GraphError(f"adjacency not symmetric for ({u}, {v})")

    @property
    def _nbr_sets(self) -> tuple[frozenset[int], ...]:
        sets = self.__dict__.get("_sets")
        if sets is None:
            sets = tuple(frozenset(a) for a in self.adjacency)
            object.__setattr__(self, "_sets", sets)
        return sets

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        cached = self.__dict__.get("_edges")
        if cached is None:
            cached = [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]
            object.__setattr__(self, "_edges", cached)
        return list(cached)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __len__(self) -> int:
        return self.n


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph` from an edge list.

    Raises :class:`GraphError` on out-of-range endpoints, self-loops and
    duplicate edges (in either orientation).
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def _from_adjacency_sets(adj: Sequence[Iterable[int]]) -> Graph:
    return Graph(len(adj), tuple(tuple(sorted(a)) for a in adj))


def distances_from(g: Graph, v: int) -> list[float]:
    """BFS distances from ``v``; unreachable vertices get ``math.inf``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    dist: list[float] = [INF] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return all(d != INF for d in distances_from(g, 0))


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity of every vertex. Requires a connected, non-empty graph."""
    if g.n == 0:
        raise GraphError("empty graph has no eccentricities")
    ecc = []
    for v in range(g.n):
        d = max(distances_from(g, v))
        if d == INF:
            raise GraphError("graph is disconnected")
        ecc.append(int(d))
    return ecc


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def central_vertex(g: Graph) -> int:
    """Least-id vertex whose eccentricity equals the radius."""
    ecc = eccentricities(g)
    return ecc.index(min(ecc))


@dataclass(frozen=True)
class RootedTree:
    """A spanning tree with a fixed root.

    ``parent[root]`` is ``None``; ``level[v]`` is the distance to the root in
    the tree.
    """

    root: int
    parent: tuple[int | None, ...]
    level: tuple[int, ...]

    def __post_init__(self):
        n = len(self.parent)
        if len(self.level) != n or not 0 <= self.root < n:
            raise GraphError("malformed rooted tree")
        if self.parent[self.root] is not None or self.level[self.root] != 0:
            raise GraphError("root must have no parent and level 0")
        for v, p in enumerate(self.parent):
            if v == self.root:
                continue
            if p is None or not 0 <= p < n:
                raise GraphError(f"vertex {v} has no valid parent")
            if self.level[v] != self.level[p] + 1:
                raise GraphError(f"level of {v} is not one more than its parent's")

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def depth(self) -> int:
        return max(self.level)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(edge_key(v, p) for v, p in enumerate(self.parent) if p is not None)

    def as_graph(self) -> Graph:
        return build_graph(self.n, self.edges())

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                ch[p].append(v)
        return ch

    def ancestor(self, v: int, lvl: int) -> int:
        """The ancestor of ``v`` at level ``lvl`` (``v`` itself if equal)."""
        if not 0 <= lvl <= self.level[v]:
            raise GraphError(f"no ancestor of {v} at level {lvl}")
        while self.level[v] > lvl:
            v = self.parent[v]
        return v

    def is_ancestor(self, u: int, v: int) -> bool:
        """True if ``u`` lies on the tree path from ``v`` to the root."""
        return self.level[u] <= self.level[v] and self.ancestor(v, self.level[u]) == u


def bfs_tree(g: Graph, root: int) -> RootedTree:
    """BFS tree where each vertex's parent is its least-id neighbor one level up."""
    dist = distances_from(g, root)
    if any(d == INF for d in dist):
        raise GraphError("bfs_tree requires a connected graph")
    parent: list[int | None] = [None] * g.n
    for v in range(g.n):
        if v == root:
            continue
        parent[v] = min(u for u in g.adjacency[v] if dist[u] == dist[v] - 1)
    return RootedTree(root, tuple(parent), tuple(int(d) for d in dist))


def tree_path(t: RootedTree, u: int, v: int) -> list[int]:
    """Unique tree path from ``u`` to ``v`` via their lowest common ancestor."""
    up_u, up_v = [u], [v]
    a, b = u, v
    while t.level[a] > t.level[b]:
        a = t.parent[a]
        up_u.append(a)
    while t.level[b] > t.level[a]:
        b = t.parent[b]
        up_v.append(b)
    while a != b:
        a, b = t.parent[a], t.parent[b]
        up_u.append(a)
        up_v.append(b)
    # both chains end at the LCA
    return up_u + up_v[-2::-1]


# ---------------------------------------------------------------------------
# colors

_PALETTE_ORDER = {"A": 0, "B": 1, "C": 2, "D": 3, "c": 4, "d": 5}
SINGLETONS = frozenset({"c", "d"})


@dataclass(frozen=True, order=False)
class Color:
    """A color ``(palette, index)``.

    Indexed palettes are ``A``, ``B``, ``C``, ``D`` (rendered ``a3``, ``b1``,
    ...); ``c`` and ``d`` are single colors with index fixed at 1.
    """

    palette: str
    index: int = 1

    def __post_init__(self):
        if self.palette not in _PALETTE_ORDER:
            raise ValueError(f"unknown palette {self.palette!r}")
        if self.index < 1:
            raise ValueError("color index must be >= 1")
        if self.palette in SINGLETONS and self.index != 1:
            raise ValueError(f"singleton color {self.palette!r} has index 1")

    def sort_key(self) -> tuple[int, int]:
        return (_PALETTE_ORDER[self.palette], self.index)

    def __lt__(self, other: "Color") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.palette in SINGLETONS:
            return self.palette
        return f"{self.palette.lower()}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Color":
        text = text.strip()
        if text in SINGLETONS:
            return cls(text)
        head, tail = text[:1], text[1:]
        if head not in "abcd" or not tail.isdigit():
            raise ValueError(f"cannot parse color {text!r}")
        return cls(head.upper(), int(tail))


def palette(tag: str, size: int) -> list[Color]:
    """Ordered palette ``[tag1, ..., tag<size>]``."""
    return [Color(tag, i) for i in range(1, size + 1)]


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from the edges of ``graph`` to colors.

    ``budget`` maps each palette tag to its declared size; the declared
    total is what a construction promises, ``used_colors`` is what it
    actually touched.
    """

    graph: Graph
    assignment: Mapping[tuple[int, int], Color]
    budget: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        edges = self.graph.edges()
        if len(self.assignment) != len(edges):
            raise GraphError("coloring is not total over the graph's edges")
        for e in edges:
            if e not in self.assignment:
                raise GraphError(f"edge {e} is uncolored")
        for c in self.assignment.values():
            size = self.budget.get(c.palette)
            if size is not None and c.index > size:
                raise GraphError(f"color {c} exceeds declared palette size {size}")

    def __getitem__(self, e: tuple[int, int]) -> Color:
        return self.assignment[edge_key(*e)]

    def color_of(self, u: int, v: int) -> Color:
        return self.assignment[edge_key(u, v)]

    def used_colors(self) -> list[Color]:
        return sorted(set(self.assignment.values()))

    @property
    def num_colors(self) -> int:
        """Declared palette total, or the number of used colors if undeclared."""
        if self.budget:
            return sum(self.budget.values())
        return len(set(self.assignment.values()))


def layerwise_coloring(t: RootedTree, colors: Sequence[Color]) -> EdgeColoring:
    """Color the tree edge ``(parent(v), v)`` with ``colors[level(v) - 1]``.

    ``colors`` is an ordered list and may repeat entries.
    """
    if len(colors) < t.depth:
        raise GraphError(f"palette of size {len(colors)} is shorter than tree depth {t.depth}")
    assignment = {
        edge_key(v, p): colors[t.level[v] - 1]
        for v, p in enumerate(t.parent)
        if p is not None
    }
    return EdgeColoring(t.as_graph(), assignment)
