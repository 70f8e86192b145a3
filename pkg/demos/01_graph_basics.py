# # Graphs, BFS trees and layer-wise colorings
#
# Every construction in the package starts from a breadth-first tree rooted
# at a central vertex. This walk-through builds a few small graphs and looks
# at the pieces the colorings are made from.

# %%
from rainbowprod import bfs_tree, central_vertex, diameter, layerwise_coloring, radius, tree_path
from rainbowprod.generators import cycle_graph, grid_graph, path_graph
from rainbowprod.graph import palette

# %%
# The path on 9 vertices has radius 4; its middle vertex is central.
p9 = path_graph(9)
print("P9: radius", radius(p9), "diameter", diameter(p9), "center", central_vertex(p9))

# %%
# A grid is a Cartesian product of two paths in disguise.
grid = grid_graph(3, 4)
print("3x4 grid: radius", radius(grid), "diameter", diameter(grid))

# %%
# BFS trees keep every vertex at its true distance from the root; ties go to
# the parent with the smaller id, so the tree is deterministic.
c6 = cycle_graph(6)
t = bfs_tree(c6, central_vertex(c6))
print("C6 tree parents:", t.parent, "levels:", t.level)

# %%
# A layer-wise coloring gives each tree edge the color indexed by the level
# of its deeper endpoint. Any root path is then rainbow.
col = layerwise_coloring(t, palette("A", t.depth))
for v in range(c6.n):
    path = tree_path(t, v, t.root)
    print(v, "->", t.root, path, [str(col.color_of(a, b)) for a, b in zip(path, path[1:])])
