"""Graph powers and the Cartesian, lexicographic and strong products.

Product vertices are pairs ``[g, h]`` laid out as ``index = g * |H| + h``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .graph import (
    Graph,
    GraphError,
    RootedTree,
    _from_adjacency_sets,
    distances_from,
    edge_key,
    is_connected,
)


class EdgeType(Enum):
    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True)
class ProductGraph:
    """A product graph together with its vertex-pair bookkeeping."""

    graph: Graph
    dims: tuple[int, int]
    kind: str
    edge_type: Mapping[tuple[int, int], EdgeType] | None = None

    def index_of(self, g: int, h: int) -> int:
        ng, nh = self.dims
        if not (0 <= g < ng and 0 <= h < nh):
            raise GraphError(f"pair ({g}, {h}) outside product dimensions {self.dims}")
        return g * nh + h

    def pair_of(self, x: int) -> tuple[int, int]:
        return divmod(x, self.dims[1])

    def pairs(self) -> list[tuple[int, int]]:
        return [self.pair_of(x) for x in range(self.graph.n)]


def power(g: Graph, k: int) -> Graph:
    """``g^k``: same vertices, ``u ~ v`` iff ``1 <= dist(u, v) <= k``."""
    if k < 1:
        raise GraphError("power exponent must be >= 1")
    if not is_connected(g):
        raise GraphError("power requires a connected graph")
    adj = []
    for v in range(g.n):
        dist = distances_from(g, v)
        adj.append([u for u in range(g.n) if 1 <= dist[u] <= k])
    return _from_adjacency_sets(adj)


def _check_nonempty(*graphs: Graph) -> None:
    for x in graphs:
        if x.n == 0:
            raise GraphError("product operands must be non-empty")


def cartesian(g: Graph, h: Graph) -> ProductGraph:
    _check_nonempty(g, h)
    nh = h.n
    adj: list[list[int]] = [[] for _ in range(g.n * nh)]
    for a in range(g.n):
        for b in range(nh):
            x = a * nh + b
            adj[x].extend(a * nh + b2 for b2 in h.adjacency[b])
            adj[x].extend(a2 * nh + b for a2 in g.adjacency[a])
    return ProductGraph(_from_adjacency_sets(adj), (g.n, nh), "cartesian")


def lexicographic(g: Graph, h: Graph) -> ProductGraph:
    """``[g1,h1] ~ [g2,h2]`` iff ``g1 ~ g2``, or ``g1 == g2`` and ``h1 ~ h2``."""
    _check_nonempty(g, h)
    nh = h.n
    adj: list[list[int]] = [[] for _ in range(g.n * nh)]
    for a in range(g.n):
        for b in range(nh):
            x = a * nh + b
            adj[x].extend(a * nh + b2 for b2 in h.adjacency[b])
            for a2 in g.adjacency[a]:
                adj[x].extend(range(a2 * nh, a2 * nh + nh))
    return ProductGraph(_from_adjacency_sets(adj), (g.n, nh), "lexicographic")


def strong(g: Graph, h: Graph) -> ProductGraph:
    """Strong product with every edge tagged Type-1 (Cartesian) or Type-2 (diagonal)."""
    for x in (g, h):
        if x.n < 2 or not is_connected(x):
            raise GraphError("strong product requires non-trivial connected operands")
    nh = h.n
    adj: list[list[int]] = [[] for _ in range(g.n * nh)]
    types: dict[tuple[int, int], EdgeType] = {}
    for a in range(g.n):
        for b in range(nh):
            x = a * nh + b
            for b2 in h.adjacency[b]:
                y = a * nh + b2
                adj[x].append(y)
                types[edge_key(x, y)] = EdgeType.TYPE1
            for a2 in g.adjacency[a]:
                y = a2 * nh + b
                adj[x].append(y)
                types[edge_key(x, y)] = EdgeType.TYPE1
                for b2 in h.adjacency[b]:
                    y = a2 * nh + b2
                    adj[x].append(y)
                    types[edge_key(x, y)] = EdgeType.TYPE2
    return ProductGraph(_from_adjacency_sets(adj), (g.n, nh), "strong", types)


@dataclass(frozen=True)
class Decomposition:
    """Ownership of Cartesian edges by the copies ``G_j`` and ``H_i``.

    ``owner[e]`` is ``("G", j)`` for an edge of the copy of G at ``h = j`` and
    ``("H", i)`` for an edge of the copy of H at ``g = i``.
    """

    dims: tuple[int, int]
    owner: Mapping[tuple[int, int], tuple[str, int]]
    g_root: int
    h_root: int

    def root(self, copy: str, j: int) -> tuple[int, int]:
        """Root pair of a copy: ``[g0, h_j]`` for ``G_j``, ``[g_j, h0]`` for ``H_j``."""
        return (self.g_root, j) if copy == "G" else (j, self.h_root)

    def edges_of(self, copy: str, j: int) -> list[tuple[int, int]]:
        return sorted(e for e, o in self.owner.items() if o == (copy, j))


def gh_decomposition(g_tree: RootedTree | Graph, h_tree: RootedTree | Graph, p: ProductGraph) -> Decomposition:
    """Assign every Cartesian edge of ``p`` built over ``g_tree``/``h_tree`` to its copy.

    Edges of ``p`` whose moving coordinate is not an edge of the corresponding
    operand (non-tree edges, diagonal edges, lexicographic E2 edges) are not
    owned. Raises :class:`GraphError` if ``p`` lacks a Cartesian edge.
    """
    g_root = g_tree.root if isinstance(g_tree, RootedTree) else 0
    h_root = h_tree.root if isinstance(h_tree, RootedTree) else 0
    gg = g_tree.as_graph() if isinstance(g_tree, RootedTree) else g_tree
    hg = h_tree.as_graph() if isinstance(h_tree, RootedTree) else h_tree
    if p.dims != (gg.n, hg.n):
        raise GraphError("product dimensions do not match the operands")
    nh = hg.n
    owner: dict[tuple[int, int], tuple[str, int]] = {}
    for a in range(gg.n):
        for b in range(nh):
            x = a * nh + b
            for b2 in hg.adjacency[b]:
                if b2 > b:
                    owner[(x, a * nh + b2)] = ("H", a)
            for a2 in gg.adjacency[a]:
                if a2 > a:
                    owner[(x, a2 * nh + b)] = ("G", b)
    for x, y in owner:
        if not p.graph.has_edge(x, y):
            raise GraphError(f"product is missing Cartesian edge {p.pair_of(x)}-{p.pair_of(y)}")
    return Decomposition(p.dims, owner, g_root, h_root)
