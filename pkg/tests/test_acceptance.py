"""Acceptance criteria, one test each.

Every test prints a single ``[criterion N] PASS|FAIL ...`` line to the
terminal (also when run as ``python3 tests/test_acceptance.py``).
"""
from __future__ import annotations

import math
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import lex_corpus, lex_r1_corpus, pair_corpus, power_corpus  # noqa: E402
from rainbowprod.cli import bound_report  # noqa: E402
from rainbowprod.colorings import (  # noqa: E402
    build_lex_scaffold,
    build_strong_scaffold,
    color_cartesian,
    color_lexicographic,
    color_lexicographic_r1,
    color_power,
    color_strong,
)
from rainbowprod.generators import complete_graph, cycle_graph, path_graph, random_tree, star_graph  # noqa: E402
from rainbowprod.graph import Color, bfs_tree, central_vertex, diameter, palette, radius  # noqa: E402
from rainbowprod.products import cartesian, gh_decomposition, lexicographic, power, strong  # noqa: E402
from rainbowprod.verifier import (  # noqa: E402
    brute_force_rc,
    find_rainbow_coloring,
    is_rainbow_connected,
    rainbow_reachable_set,
    strong_reachability_classes,
)


def report(number: int, ok: bool, detail: str, capsys=None) -> None:
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def verified(coloring) -> bool:
    return is_rainbow_connected(coloring.graph, coloring).connected


# -- checks: each returns (ok, detail) ---------------------------------------


def check_power_bound():
    start, bad, count = time.perf_counter(), [], 0
    for i, g in enumerate(power_corpus(300, seed=2024)):
        for k in (2, 3, 4):
            col = color_power(g, k)
            count += 1
            want = 2 * math.ceil(radius(g) / k) + 1
            if col.num_colors != want or not verified(col):
                bad.append((i, k))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    return ok, f"power: {count} instances, {len(bad)} failures, {elapsed:.1f}s (limit 60s)"


def check_power_tightness():
    rows, ok = [], True
    for k in (2, 3):
        for r in (1, 2, 3):
            h = path_graph(2 * k * r + 1)
            hk = power(h, k)
            rk, dk = radius(hk), diameter(hk)
            col = color_power(h, k)
            good = dk == 2 * rk and rk == r and col.num_colors == dk + 1 and verified(col)
            ok &= good
            rows.append(f"P{2 * k * r + 1}^{k}:diam={dk},r={rk},colors={col.num_colors}")
    return ok, "power tightness " + " ".join(rows)


def check_cartesian():
    bad = 0
    pairs = pair_corpus(300, seed=7)
    for g, h in pairs:
        col = color_cartesian(g, h)
        if col.num_colors != 2 * (radius(g) + radius(h)) or not verified(col):
            bad += 1
    tight = []
    for a, b in ((3, 3), (5, 3)):
        col = color_cartesian(path_graph(a), path_graph(b))
        tight.append(verified(col) and diameter(col.graph) == col.num_colors)
    return bad == 0 and all(tight), f"cartesian: {len(pairs)} pairs, {bad} failures; P3□P3, P5□P3 tight={tight}"


def check_lex():
    bad = 0
    pairs = lex_corpus(300, seed=11)
    for g, h in pairs:
        col = color_lexicographic(g, h)
        if col.num_colors != 2 * radius(col.graph) or not verified(col):
            bad += 1
    col = color_lexicographic(path_graph(5), complete_graph(2))
    tight = col.num_colors == diameter(col.graph) == 4 and verified(col)
    return bad == 0 and tight, f"lexicographic r>=2: {len(pairs)} pairs, {bad} failures; P5∘K2 colors=diam=4 {tight}"


def check_lex_r1():
    start, bad = time.perf_counter(), 0
    pairs = lex_r1_corpus(100, seed=13)
    for g, h in pairs:
        col = color_lexicographic_r1(g, h)
        if col.num_colors > 3 or not verified(col):
            bad += 1
    p = lexicographic(star_graph(5), complete_graph(2)).graph
    no_two = find_rainbow_coloring(p, 2) is None
    three = color_lexicographic_r1(star_graph(5), complete_graph(2))
    exact = no_two and three.num_colors == 3 and verified(three)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and exact and elapsed < 600
    return ok, (f"lexicographic r=1: {len(pairs)} products, {bad} failures; "
                f"K_1,5∘K2 no 2-coloring={no_two}, rc=3 {exact}; {elapsed:.1f}s (limit 600s)")


def check_strong():
    bad = 0
    pairs = pair_corpus(300, seed=17)
    for g, h in pairs:
        col = color_strong(g, h)
        if col.num_colors != 2 * max(radius(g), radius(h)) + 2 or not verified(col):
            bad += 1
    rep = bound_report("strong", color_strong(path_graph(5), path_graph(3)))
    tight = rep.colors == 6 and rep.diameter == 4 and rep.ratio == 1.5 <= 2 + 2 / rep.radius
    return bad == 0 and tight, f"strong: {len(pairs)} pairs, {bad} failures; P5⊠P3 ratio {rep.ratio} <= 3 {tight}"


def check_radius_identities():
    violations, checks = 0, 0
    for seed in (7, 17):
        for g, h in pair_corpus(300, seed=seed):
            rg, rh = radius(g), radius(h)
            violations += radius(cartesian(g, h).graph) != rg + rh
            violations += radius(strong(g, h).graph) != max(rg, rh)
            checks += 2
    for g in power_corpus(300, seed=2024):
        r, d = radius(g), diameter(g)
        for k in (2, 3, 4):
            hk = power(g, k)
            violations += radius(hk) != math.ceil(r / k)
            violations += diameter(hk) != math.ceil(d / k)
            checks += 2
    return violations == 0, f"radius identities: {checks} checks, {violations} violations"


def check_oracle():
    start, wrong = time.perf_counter(), []
    cases = [(complete_graph(n), 1) for n in range(2, 7)]
    cases += [(path_graph(n), n - 1) for n in range(2, 7)]
    cases += [(star_graph(m), m) for m in range(1, 5)]
    cases += [(cycle_graph(n), math.ceil(n / 2)) for n in (4, 5, 6)]
    for g, want in cases:
        got = brute_force_rc(g, 8)
        if got != want:
            wrong.append((g.n, g.m, got, want))
    elapsed = time.perf_counter() - start
    return not wrong and elapsed < 300, f"oracle: {len(cases)} graphs, {len(wrong)} mismatches, {elapsed:.1f}s (limit 300s)"


def strong_reachability_holds(g, h) -> tuple[bool, bool, bool]:
    sc = build_strong_scaffold(g, h)
    col = color_strong(g, h)
    pg = sc.product.graph
    a, b = palette("A", sc.depth), palette("B", sc.depth)
    r_a, r_b = strong_reachability_classes(sc)
    a_reach = rainbow_reachable_set(pg, col, sc.root, a)
    rar = r_a <= a_reach
    b_reach = set()
    for x in sc.cls(1, 0):
        b_reach |= rainbow_reachable_set(pg, col, x, b)
    rbr = r_b <= b_reach
    d = Color("d")

    def d_link(u, other):
        return any(col.color_of(u, w) == d and w in other for w in pg.adjacency[u])

    dlink = all(d_link(u, r_b) for u in r_a - r_b if u != sc.root)
    dlink &= all(d_link(u, r_a) for u in r_b - r_a if u != sc.root)
    return rar, rbr, dlink


def check_structural():
    dec_bad = 0
    for g, h in pair_corpus(300, seed=7):
        gt, ht = bfs_tree(g, central_vertex(g)), bfs_tree(h, central_vertex(h))
        for p, (x, y), gm, hm in ((cartesian(g, h), (g, h), g.m, h.m),
                                   (strong(g, h), (gt, ht), g.n - 1, h.n - 1)):
            dec = gh_decomposition(x, y, p)
            n_g, n_h = p.dims
            per_g = [len(dec.edges_of("G", j)) for j in range(n_h)]
            per_h = [len(dec.edges_of("H", i)) for i in range(n_g)]
            dec_bad += per_g != [gm] * n_h or per_h != [hm] * n_g or sum(per_g) + sum(per_h) != len(dec.owner)
    conflicts = 0
    lex_pairs = lex_corpus(300, seed=11) + [(random_tree(n, seed=n), complete_graph(3)) for n in range(5, 12)]
    for g, h in lex_pairs:
        try:
            sc = build_lex_scaffold(g, h)
        except AssertionError:
            conflicts += 1
            continue
        conflicts += set(sc.rule) != set(sc.e2)
    failures = [0, 0, 0]
    strong_pairs = pair_corpus(50, seed=23)
    for g, h in strong_pairs:
        for i, good in enumerate(strong_reachability_holds(g, h)):
            failures[i] += not good
    ok = dec_bad == 0 and conflicts == 0 and failures == [0, 0, 0]
    return ok, (f"structure: decomposition failures {dec_bad}; lexicographic rule conflicts {conflicts} "
                f"over {len(lex_pairs)}; strong rar/rbr/DLink failures {failures} over {len(strong_pairs)}")


CRITERIA = {
    1: check_power_bound,
    2: check_power_tightness,
    3: check_cartesian,
    4: check_lex,
    5: check_lex_r1,
    6: check_strong,
    7: check_radius_identities,
    8: check_oracle,
    9: check_structural,
}


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number]()
    report(number, ok, detail, capsys)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, check in CRITERIA.items():
        ok, detail = check()
        report(number, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
