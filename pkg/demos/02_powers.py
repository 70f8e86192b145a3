# # Rainbow colorings of graph powers
#
# The k-th power joins vertices at distance at most k. Cutting the BFS tree
# into residue classes of levels mod k gives a spanning forest of the power
# that needs only 2*ceil(r/k) + 1 colors.

# %%
import math

from rainbowprod import color_power, diameter, is_rainbow_connected, power, radius
from rainbowprod import bfs_tree, central_vertex
from rainbowprod.colorings import build_power_scaffold
from rainbowprod.generators import path_graph, random_connected

# %%
h = path_graph(9)
sc = build_power_scaffold(bfs_tree(h, central_vertex(h)), 2)
for i in range(2):
    print(f"residue class {i}: vertices {sorted(sc.residue_class(i))}, forest edges {sc.forest_edges(i)}")

# %%
col = color_power(h, 2)
print("P9^2 uses", col.num_colors, "colors; diameter", diameter(col.graph))
for (u, v), c in sorted(col.assignment.items()):
    print(f"  {u}-{v}: {c}")
print("verifier:", is_rainbow_connected(col.graph, col).lines()[0])

# %%
# Paths on 2kr+1 vertices are the tight family: the power has diameter
# exactly 2r, so no coloring can use fewer than 2r colors, and the
# construction spends one more.
for k in (2, 3):
    for r in (1, 2, 3):
        hk = power(path_graph(2 * k * r + 1), k)
        print(f"k={k} r={r}: r(H^k)={radius(hk)} diam={diameter(hk)} colors={color_power(path_graph(2 * k * r + 1), k).num_colors}")

# %%
# Random graphs behave the same way.
g = random_connected(10, 0.25, seed=3)
for k in (2, 3, 4):
    c = color_power(g, k)
    assert c.num_colors == 2 * math.ceil(radius(g) / k) + 1
    print(k, c.num_colors, is_rainbow_connected(c.graph, c).connected)
