"""Seeded random corpora shared by the property and acceptance tests."""
from __future__ import annotations

import random

from rainbowprod.generators import random_connected, random_radius_one, random_tree
from rainbowprod.graph import Graph, build_graph, is_connected, radius
from rainbowprod.products import lexicographic


def connected_graph(rng: random.Random, lo: int, hi: int) -> Graph:
    """Alternates sparse trees and G(n, p) samples so radii vary."""
    n = rng.randint(lo, hi)
    if rng.random() < 0.4:
        return random_tree(n, seed=rng.randrange(2**32))
    return random_connected(n, rng.uniform(0.15, 0.7), seed=rng.randrange(2**32))


def any_graph(rng: random.Random, lo: int, hi: int) -> Graph:
    n = rng.randint(lo, hi)
    p = rng.uniform(0.0, 0.8)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def power_corpus(count: int = 300, seed: int = 2024) -> list[Graph]:
    rng = random.Random(seed)
    return [connected_graph(rng, 2, 10) for _ in range(count)]


def pair_corpus(count: int = 300, seed: int = 7, hi: int = 7) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    return [(connected_graph(rng, 2, hi), connected_graph(rng, 2, hi)) for _ in range(count)]


def lex_corpus(count: int = 300, seed: int = 11) -> list[tuple[Graph, Graph]]:
    """Pairs (connected G, arbitrary non-trivial H) with r(G ∘ H) >= 2."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g, h = connected_graph(rng, 2, 7), any_graph(rng, 2, 6)
        if radius(lexicographic(g, h).graph) >= 2:
            out.append((g, h))
    return out


def lex_r1_corpus(count: int = 100, seed: int = 13) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_radius_one(rng.randint(2, 6), rng.uniform(0.0, 0.8), seed=rng.randrange(2**32))
        h = random_radius_one(rng.randint(2, 4), rng.uniform(0.0, 0.8), seed=rng.randrange(2**32))
        p = lexicographic(g, h).graph
        assert is_connected(p) and radius(p) == 1
        out.append((g, h))
    return out
