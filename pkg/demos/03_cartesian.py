# # Cartesian products
#
# The Cartesian product splits into copies of each factor. Coloring the copy
# of G through the root of H with palette A, the other G-copies with B, and
# the H-copies with C and D gives a rainbow coloring with 2(r(G) + r(H))
# colors, which equals the product's radius doubled.

# %%
from rainbowprod import cartesian, color_cartesian, diameter, gh_decomposition, is_rainbow_connected, radius
from rainbowprod.generators import cycle_graph, path_graph

# %%
g, h = path_graph(3), path_graph(3)
p = cartesian(g, h)
dec = gh_decomposition(g, h, p)
for j in range(h.n):
    print(f"G-copy at h={j}:", [(p.pair_of(x), p.pair_of(y)) for x, y in dec.edges_of("G", j)])

# %%
col = color_cartesian(g, h)
print("P3 □ P3:", col.num_colors, "colors, diameter", diameter(col.graph))

# %%
# With odd paths the diameter equals the color count, so the coloring is optimal.
col = color_cartesian(path_graph(5), path_graph(3))
print("P5 □ P3:", col.num_colors, "colors, diameter", diameter(col.graph),
      is_rainbow_connected(col.graph, col).lines()[0])

# %%
col = color_cartesian(cycle_graph(6), path_graph(4))
print("C6 □ P4: radius", radius(col.graph), "colors", col.num_colors)
