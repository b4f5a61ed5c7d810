"""Minimum alpha-separator search (frequent itemset-driven search)."""

from ._core import (
    Graph,
    GraphError,
    Objective,
    SolveReport,
    SolverConfig,
    TimelineEntry,
    accept_prob,
    betweenness,
    brute_force_min_separator,
    brute_force_vertex_cover,
    check_separator,
    component_sizes,
    generate_er,
    load_edge_list,
    node_frequencies,
    objective,
    parse_edge_list,
    removal_eval,
    solve,
    threshold,
)

__all__ = [
    "Graph",
    "GraphError",
    "Objective",
    "SolveReport",
    "SolverConfig",
    "TimelineEntry",
    "accept_prob",
    "betweenness",
    "brute_force_min_separator",
    "brute_force_vertex_cover",
    "check_separator",
    "component_sizes",
    "generate_er",
    "load_edge_list",
    "node_frequencies",
    "objective",
    "parse_edge_list",
    "removal_eval",
    "solve",
    "threshold",
]
