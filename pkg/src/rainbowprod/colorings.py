"""Constructive rainbow colorings of graph powers and graph products.

Each construction works on BFS trees of the operands rooted at their
least-id central vertices, colors the tree-based spanning subgraph of the
input, and gives every leftover edge one already-used color. The output is
always a total :class:`~rainbowprod.graph.EdgeColoring` of the full input
graph with the palette sizes declared in ``budget``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import (
    Color,
    EdgeColoring,
    Graph,
    GraphError,
    RootedTree,
    bfs_tree,
    central_vertex,
    edge_key,
    is_connected,
    palette,
    radius,
)
from .products import ProductGraph, cartesian, lexicographic, power, strong
from .verifier import (
    SearchBudgetExceeded,
    find_rainbow_coloring,
    is_rainbow_connected,
    search_cap_from_env,
)


class RuleConflict(AssertionError):
    """Two lexicographic edge rules claimed the same edge."""


def _require_nontrivial_connected(*graphs: Graph, what: str) -> None:
    for x in graphs:
        if x.n < 2 or not is_connected(x):
            raise GraphError(f"{what} requires non-trivial connected operands")


def _central_bfs_tree(g: Graph) -> RootedTree:
    return bfs_tree(g, central_vertex(g))


def _is_tree_edge(t: RootedTree, u: int, v: int) -> bool:
    return t.parent[u] == v or t.parent[v] == u


# ---------------------------------------------------------------------------
# graph powers


@dataclass(frozen=True)
class PowerScaffold:
    """Residue classes, blocks and the ``par`` forest on a BFS tree.

    ``residue[u] = level(u) mod k`` and ``block[u] = ceil(level(u) / k)``;
    ``par[u]`` is the root for ``level(u) <= k`` and the ancestor ``k``
    levels up otherwise. The forest tree ``G_i`` has edges
    ``(u, par(u))`` for ``residue[u] == i``, rooted at the tree root.
    """

    tree: RootedTree
    k: int
    residue: tuple[int | None, ...]
    block: tuple[int, ...]
    par: tuple[int | None, ...]

    @property
    def root(self) -> int:
        return self.tree.root

    @property
    def num_blocks(self) -> int:
        return math.ceil(self.tree.depth / self.k)

    def residue_class(self, i: int) -> set[int]:
        return {u for u, r in enumerate(self.residue) if r == i}

    def block_class(self, i: int, j: int) -> set[int]:
        """Vertices of residue ``i`` (plus the root, for ``j == 0``) in block ``j``."""
        members = {u for u in self.residue_class(i) if self.block[u] == j}
        if j == 0:
            members.add(self.root)
        return members

    def forest_edges(self, i: int) -> list[tuple[int, int]]:
        return sorted(edge_key(u, self.par[u]) for u in self.residue_class(i))

    def forest_tree(self, i: int) -> RootedTree:
        """``G_i`` as a rooted tree over its own vertices, relabelled ``0..``."""
        verts = sorted(self.residue_class(i) | {self.root})
        local = {v: x for x, v in enumerate(verts)}
        parent = tuple(None if v == self.root else local[self.par[v]] for v in verts)
        level = tuple(self.block[v] for v in verts)
        return RootedTree(local[self.root], parent, level)


def build_power_scaffold(t: RootedTree, k: int) -> PowerScaffold:
    if k < 1:
        raise GraphError("k must be >= 1")
    residue = tuple(None if v == t.root else t.level[v] % k for v in range(t.n))
    block = tuple(math.ceil(t.level[v] / k) for v in range(t.n))
    par = tuple(
        None if v == t.root else (t.root if t.level[v] <= k else t.ancestor(v, t.level[v] - k))
        for v in range(t.n)
    )
    return PowerScaffold(t, k, residue, block, par)


def color_power(h: Graph, k: int) -> EdgeColoring:
    """Rainbow coloring of ``h^k`` with ``2 * ceil(r(h) / k) + 1`` colors."""
    if k < 2:
        raise GraphError("power coloring needs k >= 2")
    _require_nontrivial_connected(h, what="power coloring")
    sc = build_power_scaffold(_central_bfs_tree(h), k)
    m = sc.num_blocks
    a, b = palette("A", m), palette("B", m)
    c = Color("c")
    hk = power(h, k)
    assignment = {}
    for u, v in hk.edges():
        if sc.par[u] == v:
            deep = u
        elif sc.par[v] == u:
            deep = v
        else:
            assignment[(u, v)] = c
            continue
        pal = a if sc.residue[deep] % 2 == 0 else b
        assignment[(u, v)] = pal[sc.block[deep] - 1]
    return EdgeColoring(hk, assignment, {"A": m, "B": m, "c": 1})


# ---------------------------------------------------------------------------
# Cartesian product


def color_cartesian(g: Graph, h: Graph) -> EdgeColoring:
    """Rainbow coloring of ``g □ h`` with ``2 * (r(g) + r(h))`` colors.

    The copy of G at the root of H gets layer-wise ``A``, every other copy
    of G layer-wise ``B``; copies of H likewise get ``C`` and ``D``.
    """
    _require_nontrivial_connected(g, h, what="cartesian product coloring")
    gt, ht = _central_bfs_tree(g), _central_bfs_tree(h)
    dg, dh = gt.depth, ht.depth
    a, b, cc, dd = palette("A", dg), palette("B", dg), palette("C", dh), palette("D", dh)
    p = cartesian(g, h)
    assignment = {}
    for x, y in p.graph.edges():
        (g1, h1), (g2, h2) = p.pair_of(x), p.pair_of(y)
        if h1 == h2 and _is_tree_edge(gt, g1, g2):
            pal = a if h1 == ht.root else b
            assignment[(x, y)] = pal[max(gt.level[g1], gt.level[g2]) - 1]
        elif g1 == g2 and _is_tree_edge(ht, h1, h2):
            pal = cc if g1 == gt.root else dd
            assignment[(x, y)] = pal[max(ht.level[h1], ht.level[h2]) - 1]
        else:
            assignment[(x, y)] = a[0]
    return EdgeColoring(p.graph, assignment, {"A": dg, "B": dg, "C": dh, "D": dh})


# ---------------------------------------------------------------------------
# lexicographic product


@dataclass(frozen=True)
class LexScaffold:
    """Edge split and rule bookkeeping for the tree-based lexicographic product.

    ``e1``/``e2`` partition the edges of ``G ∘ H`` where G is the BFS tree;
    ``lower[v]`` holds the E2 edges from ``v`` to the next level down the
    tree and ``upper[v]`` those to the level above. ``rule[e]`` is the
    number (1-7) of the rule that colors E2 edge ``e``.
    """

    product: ProductGraph
    tree: RootedTree
    r: int
    h0: int
    h1: int
    g1: int
    level: tuple[int, ...]
    e1: frozenset[tuple[int, int]]
    e2: frozenset[tuple[int, int]]
    lower: dict[int, list[tuple[int, int]]]
    upper: dict[int, list[tuple[int, int]]]
    rule: dict[tuple[int, int], int]
    extra: frozenset[tuple[int, int]] = field(default_factory=frozenset)


def _lex_rules(sc_args, up: int, down: int) -> list[int]:
    """Which of rules 1-6 claim the E2 edge from ``up`` (level L) to ``down`` (level L+1)."""
    pair_of, level, g0, h0, h1 = sc_args
    (gu, hu), (gd, hd) = pair_of(up), pair_of(down)
    hits = []
    if (gu, hu) == (g0, h0):
        hits.append(1)
    if hu == h0 and gu != g0:
        hits.append(2)
    if hd == h0 and level[down] == 1:
        hits.append(3)
    if (gu, hu) == (g0, h1) and not (hd == h0 and level[down] == 1):
        hits.append(4)
    if hu == h1 and gu != g0:
        hits.append(5)
    if hd == h1 and level[down] == 1 and (gu, hu) != (g0, h0):
        hits.append(6)
    return hits


def build_lex_scaffold(g: Graph, h: Graph, tree: RootedTree | None = None, r: int | None = None) -> LexScaffold:
    """Split the edges of ``g ∘ h`` and assign each E2 edge its rule.

    Raises :class:`RuleConflict` if two of rules 1-6 claim the same edge.
    """
    if g.n < 2 or h.n < 2:
        raise GraphError("lexicographic coloring requires non-trivial operands")
    if not is_connected(g):
        raise GraphError("lexicographic coloring requires a connected first operand")
    tree = tree if tree is not None else _central_bfs_tree(g)
    p = lexicographic(g, h)
    if r is None:
        r = radius(p.graph)
    nh = h.n
    g0, h0, h1 = tree.root, 0, 1
    g1 = g.adjacency[g0][0]
    level = tuple(tree.level[x // nh] for x in range(p.graph.n))
    e1, e2, extra = set(), set(), set()
    lower: dict[int, list[tuple[int, int]]] = {x: [] for x in range(p.graph.n)}
    upper: dict[int, list[tuple[int, int]]] = {x: [] for x in range(p.graph.n)}
    rule: dict[tuple[int, int], int] = {}
    args = (p.pair_of, level, g0, h0, h1)
    for x, y in p.graph.edges():
        (ga, ha), (gb, hb) = p.pair_of(x), p.pair_of(y)
        if ga == gb or (ha == hb and _is_tree_edge(tree, ga, gb)):
            e1.add((x, y))
        elif not _is_tree_edge(tree, ga, gb):
            extra.add((x, y))
        else:
            e2.add((x, y))
            up, down = (x, y) if level[x] < level[y] else (y, x)
            lower[up].append((x, y))
            upper[down].append((x, y))
            hits = _lex_rules(args, up, down)
            if len(hits) > 1:
                raise RuleConflict(f"rules {hits} all claim edge {p.pair_of(x)}-{p.pair_of(y)}")
            rule[(x, y)] = hits[0] if hits else 7
    return LexScaffold(
        p, tree, r, h0, h1, g1, level, frozenset(e1), frozenset(e2), lower, upper, rule, frozenset(extra)
    )


def color_lexicographic(g: Graph, h: Graph) -> EdgeColoring:
    """Rainbow coloring of ``g ∘ h`` with ``2 * r(g ∘ h)`` colors, for radius >= 2."""
    if g.n < 2 or h.n < 2:
        raise GraphError("lexicographic coloring requires non-trivial operands")
    if not is_connected(g):
        raise GraphError("lexicographic coloring requires a connected first operand")
    p = lexicographic(g, h)
    r = radius(p.graph)
    if r < 2:
        raise GraphError("r(g ∘ h) = 1; use color_lexicographic_r1")
    sc = build_lex_scaffold(g, h, r=r)
    tree, level = sc.tree, sc.level
    a, b = palette("A", r), palette("B", r)
    b_prime = [a[r - 1]] + b[1:]
    by_rule = {
        1: lambda up: b[0],
        2: lambda up: a[level[up]],
        3: lambda up: b[r - 1],
        4: lambda up: a[r - 1],
        5: lambda up: b[level[up]],
        6: lambda up: a[r - 1],
        7: lambda up: b[0],
    }
    assignment = {}
    for x, y in p.graph.edges():
        e = (x, y)
        (ga, ha), (gb, hb) = p.pair_of(x), p.pair_of(y)
        if e in sc.e1:
            if ga == gb:
                assignment[e] = b[0]
            else:
                pal = a if ha == sc.h0 else b_prime
                assignment[e] = pal[max(tree.level[ga], tree.level[gb]) - 1]
        elif e in sc.e2:
            up = x if level[x] < level[y] else y
            assignment[e] = by_rule[sc.rule[e]](up)
        else:
            assignment[e] = b[0]
    return EdgeColoring(p.graph, assignment, {"A": r, "B": r})


def color_lexicographic_r1(
    g: Graph,
    h: Graph,
    *,
    node_cap: int | None = None,
    seed: int = 0,
) -> EdgeColoring:
    """Certified rainbow coloring of a radius-1 ``g ∘ h`` with at most 3 colors.

    Tries 1, 2 and 3 colors in turn with the exhaustive search. If the
    2-color search runs out of budget the 3-color search is still
    attempted; an exhausted 3-color search raises
    :class:`SearchBudgetExceeded`.
    """
    if g.n < 2 or h.n < 2:
        raise GraphError("lexicographic coloring requires non-trivial operands")
    if not is_connected(g):
        raise GraphError("lexicographic coloring requires a connected first operand")
    p = lexicographic(g, h)
    if radius(p.graph) != 1:
        raise GraphError("color_lexicographic_r1 requires r(g ∘ h) = 1")
    cap = node_cap if node_cap is not None else search_cap_from_env()
    found = None
    for k in (1, 2, 3):
        try:
            found = find_rainbow_coloring(p.graph, k, node_cap=cap, seed=seed)
        except SearchBudgetExceeded:
            if k == 3:
                raise
            continue
        if found is not None:
            break
    if found is None:
        raise SearchBudgetExceeded("no coloring with at most 3 colors was found")
    k = max(found.values()) + 1
    coloring = EdgeColoring(p.graph, {e: Color("A", c + 1) for e, c in found.items()}, {"A": k})
    if not is_rainbow_connected(p.graph, coloring).connected:
        raise AssertionError("search returned a coloring that does not verify")
    return coloring


def color_lexicographic_any(g: Graph, h: Graph, **kwargs) -> EdgeColoring:
    """Dispatch on ``r(g ∘ h)``: the layered construction for r >= 2, search for r = 1."""
    p = lexicographic(g, h)
    if is_connected(p.graph) and radius(p.graph) == 1:
        return color_lexicographic_r1(g, h, **kwargs)
    return color_lexicographic(g, h)


# ---------------------------------------------------------------------------
# strong product


@dataclass(frozen=True)
class StrongScaffold:
    """Level classes of the strong product, in the caller's coordinates.

    ``big``/``small`` are the BFS trees of the operand with the larger and
    smaller radius; ``swapped`` says whether ``big`` is the second operand.
    ``level_class[x] = (y, z)`` means product vertex ``x`` lies in
    ``V_{y,z}`` (level ``y`` in ``big``, ``z`` in ``small``).
    """

    product: ProductGraph
    big: RootedTree
    small: RootedTree
    swapped: bool
    level_class: dict[int, tuple[int, int]]
    a_shift: dict[int, list[Color]]
    b_shift: dict[int, list[Color]]

    @property
    def depth(self) -> int:
        return self.big.depth

    def coords(self, x: int) -> tuple[int, int]:
        """``(big vertex, small vertex)`` of product vertex ``x``."""
        g, h = self.product.pair_of(x)
        return (h, g) if self.swapped else (g, h)

    def index(self, a: int, b: int) -> int:
        return self.product.index_of(b, a) if self.swapped else self.product.index_of(a, b)

    @property
    def root(self) -> int:
        return self.index(self.big.root, self.small.root)

    def cls(self, y: int, z: int) -> set[int]:
        return {x for x, yz in self.level_class.items() if yz == (y, z)}


def build_strong_scaffold(g: Graph, h: Graph) -> StrongScaffold:
    _require_nontrivial_connected(g, h, what="strong product coloring")
    p = strong(g, h)
    swapped = radius(h) > radius(g)
    big, small = (_central_bfs_tree(h), _central_bfs_tree(g)) if swapped else (
        _central_bfs_tree(g), _central_bfs_tree(h))
    dg, dh = big.depth, small.depth
    a, b = palette("A", dg), palette("B", dg)
    d = Color("d")
    a_shift = {0: [Color("c")] + a[1:]}
    b_shift: dict[int, list[Color]] = {}
    for w in range(1, dh + 1):
        a_shift[w] = [d] * w + a[w:]
        b_shift[w] = [d] * w + b[w:]
    sc = StrongScaffold(p, big, small, swapped, {}, a_shift, b_shift)
    for x in range(p.graph.n):
        u, v = sc.coords(x)
        sc.level_class[x] = (big.level[u], small.level[v])
    return sc


def color_strong(g: Graph, h: Graph) -> EdgeColoring:
    """Rainbow coloring of ``g ⊠ h`` with ``2 * max(r(g), r(h)) + 2`` colors."""
    sc = build_strong_scaffold(g, h)
    big, small = sc.big, sc.small
    dg = big.depth
    a, b = palette("A", dg), palette("B", dg)
    d = Color("d")
    assignment = {}
    for x, y in sc.product.graph.edges():
        (g1, h1), (g2, h2) = sc.coords(x), sc.coords(y)
        if g1 == g2:
            if not _is_tree_edge(small, h1, h2):
                color = d
            else:
                idx = max(small.level[h1], small.level[h2]) - 1
                lg = big.level[g1]
                color = a[idx] if lg == 0 else b[idx] if lg == 1 else d
        elif h1 == h2:
            if not _is_tree_edge(big, g1, g2):
                color = d
            else:
                w = small.level[h1]
                pal = sc.a_shift[w] if w % 2 == 0 else sc.b_shift[w]
                color = pal[max(big.level[g1], big.level[g2]) - 1]
        elif _is_tree_edge(big, g1, g2) and _is_tree_edge(small, h1, h2):
            (y1, z1), (y2, z2) = sc.level_class[x], sc.level_class[y]
            if y2 - y1 == z2 - z1:
                yy, zz = min(y1, y2), min(z1, z2)
                color = (a if abs(zz - yy) % 2 == 0 else b)[zz]
            elif {(y1, z1), (y2, z2)} == {(1, 1), (2, 0)}:
                color = a[1]
            else:
                color = d
        else:
            color = d
        assignment[(x, y)] = color
    return EdgeColoring(sc.product.graph, assignment, {"A": dg, "B": dg, "c": 1, "d": 1})


# ---------------------------------------------------------------------------


def color_operation(op: str, g: Graph, h: Graph | None = None, *, k: int | None = None, **kwargs) -> EdgeColoring:
    """Dispatch by operation name: ``power`` (needs ``k``), ``cartesian``, ``lex``, ``strong``."""
    if op == "power":
        if k is None:
            raise GraphError("power coloring needs k")
        return color_power(g, k)
    if h is None:
        raise GraphError(f"{op} needs two operands")
    if op == "cartesian":
        return color_cartesian(g, h)
    if op in ("lex", "lexicographic"):
        return color_lexicographic_any(g, h, **kwargs)
    if op == "strong":
        return color_strong(g, h)
    raise GraphError(f"unknown operation {op!r}")
