# # Lexicographic products
#
# In G ∘ H every vertex of one H-copy is joined to every vertex of each
# neighbouring copy. For radius at least 2 a rule-based coloring over a BFS
# tree of G uses 2r colors; for radius 1 an exhaustive search finds a
# coloring with at most 3.

# %%
from collections import Counter

from rainbowprod import color_lexicographic, color_lexicographic_r1, diameter, is_rainbow_connected, lexicographic
from rainbowprod.colorings import build_lex_scaffold
from rainbowprod.generators import complete_graph, empty_graph, path_graph, star_graph
from rainbowprod.verifier import find_rainbow_coloring

# %%
# Which rule colored each edge between neighbouring copies?
sc = build_lex_scaffold(path_graph(5), complete_graph(2))
print("rules used:", sorted(Counter(sc.rule.values()).items()))

# %%
col = color_lexicographic(path_graph(5), complete_graph(2))
print("P5 ∘ K2:", col.num_colors, "colors, diameter", diameter(col.graph))

# %%
# H does not have to be connected.
col = color_lexicographic(path_graph(7), empty_graph(3))
print("P7 ∘ 3K1:", col.num_colors, "colors", is_rainbow_connected(col.graph, col).lines()[0])

# %%
# The star with five leaves: two colors can never work (the exhaustive
# search says so), and three do.
p = lexicographic(star_graph(5), complete_graph(2)).graph
print("2-coloring of K_1,5 ∘ K2:", find_rainbow_coloring(p, 2))
col = color_lexicographic_r1(star_graph(5), complete_graph(2))
print("search result uses", col.num_colors, "colors")
