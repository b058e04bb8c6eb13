"""Exact domination numbers and distance lower bounds for small graphs."""

import json

from ._domgraph import (
    DomgraphError,
    Graph,
    average_distance,
    boundary,
    counterexample,
    diameter,
    distances,
    enumerate_min_dominating_sets,
    find_tight_instances,
    gamma_bruteforce_oracle,
    gamma_exact,
    is_dominating_set,
    lift,
    read_graph_file,
    verify_corpus,
    wiener_index,
)
from ._domgraph import analyze_json as _analyze_json

__all__ = [
    "DomgraphError",
    "Graph",
    "analyze",
    "average_distance",
    "boundary",
    "counterexample",
    "diameter",
    "distances",
    "enumerate_min_dominating_sets",
    "find_tight_instances",
    "gamma_bruteforce_oracle",
    "gamma_exact",
    "is_dominating_set",
    "lift",
    "read_graph_file",
    "verify_corpus",
    "wiener_index",
]


def analyze(graph, r_values=(3, 4, 5)):
    """Full bound report for one graph, as a dict with the JSONL schema."""
    if isinstance(graph, str):
        graph = Graph.from_graph6(graph)
    return json.loads(_analyze_json(graph, list(r_values)))
