# # Strong products
#
# The strong product adds diagonal (Type-2) edges to the Cartesian product.
# Its radius is max(r(G), r(H)) and the construction spends 2*max + 2
# colors. Vertices fall into classes V[y, z] by their BFS levels; two families
# of classes reach the root through A-colored or B-colored rainbow paths.

# %%
from rainbowprod import color_strong, is_rainbow_connected, strong
from rainbowprod.cli import bound_report
from rainbowprod.colorings import build_strong_scaffold
from rainbowprod.generators import path_graph
from rainbowprod.graph import palette
from rainbowprod.verifier import rainbow_reachable_set, strong_reachability_classes

# %%
p = strong(path_graph(2), path_graph(2))
print("K2 ⊠ K2 edge types:", {e: t.name for e, t in p.edge_type.items()})

# %%
g, h = path_graph(5), path_graph(3)
sc = build_strong_scaffold(g, h)
for (y, z) in sorted(set(sc.level_class.values())):
    print(f"V[{y},{z}] =", sorted(sc.cls(y, z)))

# %%
col = color_strong(g, h)
r_a, r_b = strong_reachability_classes(sc)
a_reach = rainbow_reachable_set(col.graph, col, sc.root, palette("A", sc.depth))
print("every A-class vertex reaches the root with A colors only:", r_a <= a_reach)

# %%
print("\n".join(bound_report("strong", col).lines()))
print(is_rainbow_connected(col.graph, col).lines()[0])
