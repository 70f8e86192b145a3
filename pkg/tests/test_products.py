import math
import random

import networkx as nx
import pytest

from corpus import any_graph, connected_graph, pair_corpus, power_corpus
from oracles import floyd_warshall, fw_radius_diameter
from rainbowprod.generators import complete_graph, cycle_graph, path_graph, star_graph
from rainbowprod.graph import GraphError, bfs_tree, build_graph, central_vertex, diameter, radius
from rainbowprod.products import (
    EdgeType,
    cartesian,
    gh_decomposition,
    lexicographic,
    power,
    strong,
)

NX_PRODUCTS = {
    cartesian: nx.cartesian_product,
    lexicographic: nx.lexicographic_product,
    strong: nx.strong_product,
}


def to_nx(g):
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges())
    return x


def nx_edge_set(prod, nh):
    return {tuple(sorted((a * nh + b, c * nh + d))) for (a, b), (c, d) in prod.edges()}


def test_power_examples():
    assert power(path_graph(5), 2).edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
    assert power(path_graph(4), 1).edges() == path_graph(4).edges()
    assert power(path_graph(4), 3).m == 6
    with pytest.raises(GraphError):
        power(path_graph(3), 0)
    with pytest.raises(GraphError):
        power(build_graph(3, [(0, 1)]), 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_power_matches_distance_oracle(k):
    for g in power_corpus(60, seed=99):
        d = floyd_warshall(g)
        want = sorted((u, v) for u in range(g.n) for v in range(u + 1, g.n) if d[u][v] <= k)
        assert power(g, k).edges() == want


@pytest.mark.parametrize("op", [cartesian, lexicographic, strong])
def test_products_match_networkx(op):
    rng = random.Random(5)
    for _ in range(40):
        g, h = connected_graph(rng, 2, 6), connected_graph(rng, 2, 6)
        if op is lexicographic:
            h = any_graph(rng, 2, 5)
        p = op(g, h)
        assert p.dims == (g.n, h.n)
        assert set(p.graph.edges()) == nx_edge_set(NX_PRODUCTS[op](to_nx(g), to_nx(h)), h.n)


def test_pair_indexing():
    p = cartesian(path_graph(3), path_graph(4))
    assert p.index_of(2, 1) == 9 and p.pair_of(9) == (2, 1)
    assert p.pairs()[:5] == [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)]
    with pytest.raises(GraphError):
        p.index_of(3, 0)


def test_product_sizes():
    g, h = cycle_graph(5), path_graph(4)
    assert cartesian(g, h).graph.m == g.n * h.m + h.n * g.m
    assert lexicographic(g, h).graph.m == g.n * h.m + g.m * h.n**2
    assert strong(g, h).graph.m == g.n * h.m + h.n * g.m + 2 * g.m * h.m


def test_k1_is_identity_for_cartesian_and_lex():
    k1 = build_graph(1, [])
    for g in [path_graph(4), star_graph(3), cycle_graph(5)]:
        assert cartesian(g, k1).graph.edges() == g.edges()
        assert cartesian(k1, g).graph.edges() == g.edges()
        assert lexicographic(g, k1).graph.edges() == g.edges()


def test_strong_rejects_trivial_or_disconnected():
    with pytest.raises(GraphError):
        strong(build_graph(1, []), path_graph(3))
    with pytest.raises(GraphError):
        strong(path_graph(3), build_graph(3, [(0, 1)]))


def test_cartesian_is_type1_part_of_strong_and_inside_lex():
    for g, h in pair_corpus(40, seed=3, hi=6):
        c, s, lx = cartesian(g, h), strong(g, h), lexicographic(g, h)
        type1 = {e for e, t in s.edge_type.items() if t is EdgeType.TYPE1}
        assert set(s.edge_type) == set(s.graph.edges())
        assert type1 == set(c.graph.edges())
        assert set(c.graph.edges()) <= set(lx.graph.edges())
        for (x, y), t in s.edge_type.items():
            (a, b), (c2, d) = s.pair_of(x), s.pair_of(y)
            assert (t is EdgeType.TYPE2) == (a != c2 and b != d)


def test_decomposition_partitions_cartesian_edges():
    for g, h in pair_corpus(40, seed=4, hi=6):
        p = cartesian(g, h)
        dec = gh_decomposition(g, h, p)
        assert set(dec.owner) == set(p.graph.edges())
        for j in range(h.n):
            es = dec.edges_of("G", j)
            assert len(es) == g.m
            assert {tuple(sorted(p.pair_of(x)[0] for x in e)) for e in es} == set(g.edges())
            assert all(p.pair_of(x)[1] == j for e in es for x in e)
        for i in range(g.n):
            es = dec.edges_of("H", i)
            assert len(es) == h.m
            assert all(p.pair_of(x)[0] == i for e in es for x in e)
        assert sum(len(dec.edges_of("G", j)) for j in range(h.n)) + sum(
            len(dec.edges_of("H", i)) for i in range(g.n)) == p.graph.m


def test_decomposition_over_bfs_trees_of_strong_product():
    for g, h in pair_corpus(30, seed=8, hi=6):
        gt, ht = bfs_tree(g, central_vertex(g)), bfs_tree(h, central_vertex(h))
        s = strong(g, h)
        dec = gh_decomposition(gt, ht, s)
        assert len(dec.owner) == h.n * (g.n - 1) + g.n * (h.n - 1)
        assert all(s.edge_type[e] is EdgeType.TYPE1 for e in dec.owner)
        assert dec.root("G", 2) == (gt.root, 2) and dec.root("H", 1) == (1, ht.root)


def test_decomposition_rejects_missing_edges():
    p = cartesian(path_graph(3), path_graph(2))
    with pytest.raises(GraphError):
        gh_decomposition(cycle_graph(3), path_graph(2), p)
    with pytest.raises(GraphError):
        gh_decomposition(path_graph(4), path_graph(2), p)


def test_radius_identities_small_cases():
    assert radius(cartesian(path_graph(3), path_graph(3)).graph) == 2
    assert diameter(cartesian(path_graph(5), path_graph(3)).graph) == 6
    assert radius(strong(path_graph(5), path_graph(3)).graph) == 2
    assert radius(lexicographic(path_graph(5), complete_graph(2)).graph) == 2
    assert radius(power(path_graph(9), 2)) == 2


def test_product_radius_identities_vs_floyd_warshall():
    for g, h in pair_corpus(40, seed=21, hi=6):
        rg, rh = radius(g), radius(h)
        assert fw_radius_diameter(cartesian(g, h).graph)[0] == rg + rh
        assert fw_radius_diameter(strong(g, h).graph)[0] == max(rg, rh)
    for g in power_corpus(40, seed=22):
        r, d = fw_radius_diameter(g)
        for k in (2, 3, 4):
            assert fw_radius_diameter(power(g, k)) == (math.ceil(r / k), math.ceil(d / k))
