"""Small rainbow colorings for graph powers and Cartesian, lexicographic and strong products."""
from .colorings import (
    color_cartesian,
    color_lexicographic,
    color_lexicographic_r1,
    color_operation,
    color_power,
    color_strong,
)
from .graph import (
    Color,
    EdgeColoring,
    Graph,
    GraphError,
    RootedTree,
    bfs_tree,
    build_graph,
    central_vertex,
    diameter,
    distances_from,
    layerwise_coloring,
    radius,
    tree_path,
)
from .products import cartesian, gh_decomposition, lexicographic, power, strong
from .verifier import brute_force_rc, is_rainbow_connected, rainbow_witness_restricted

__version__ = "0.1.0"
