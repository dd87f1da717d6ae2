"""Dijkstra's single-source shortest paths with interchangeable priority queues."""
from .fibheap import FibHeap, FibNode
from .generators import PlanarConfig, RandomConfig, generate_planar, generate_random
from .graph import (
    INFINITY,
    LABEL_MAX,
    Graph,
    GraphBuilder,
    GraphFormatError,
    LabelOverflowError,
    Neighbour,
    new_graph,
    read_graph,
    write_graph,
)
from .solver import (
    VARIANTS,
    ShortestPathResult,
    bellman_ford,
    get_path,
    solve,
    solve_basic,
    solve_binary_heap,
    solve_fibonacci,
    solve_target,
    solve_tree,
)

__version__ = "0.1.0"

__all__ = [
    "FibHeap", "FibNode", "PlanarConfig", "RandomConfig", "generate_planar", "generate_random",
    "INFINITY", "LABEL_MAX", "Graph", "GraphBuilder", "GraphFormatError", "LabelOverflowError",
    "Neighbour", "new_graph", "read_graph", "write_graph", "VARIANTS", "ShortestPathResult",
    "bellman_ford", "get_path", "solve", "solve_basic", "solve_binary_heap", "solve_fibonacci",
    "solve_target", "solve_tree",
]
