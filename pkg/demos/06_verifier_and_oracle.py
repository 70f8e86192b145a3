# # Checking colorings and computing rc exactly
#
# The verifier searches over (vertex, set of colors used) states, so it is
# exact. The brute-force oracle tries every coloring up to renaming colors.

# %%
from rainbowprod import brute_force_rc, is_rainbow_connected
from rainbowprod.generators import complete_graph, cycle_graph, path_graph, star_graph

# %%
p4 = path_graph(4)
report = is_rainbow_connected(p4, {e: "red" for e in p4.edges()})
print(report.lines())

# %%
c4 = cycle_graph(4)
good = {(0, 1): 0, (2, 3): 0, (1, 2): 1, (0, 3): 1}
report = is_rainbow_connected(c4, good, witnesses=True)
print(report.connected, report.witness)

# %%
for name, g in [("K5", complete_graph(5)), ("P6", path_graph(6)), ("K_1,4", star_graph(4)),
                ("C5", cycle_graph(5)), ("C6", cycle_graph(6))]:
    print(name, "rc =", brute_force_rc(g, 6))
