"""Maximum vertex-disjoint triangle packing in interval graphs."""

from .graph_core import (
    AdjacencyGraph,
    CliqueArrangement,
    Interval,
    IntervalInstance,
    MaximalClique,
    build_overlap_graph,
    sweep_maximal_cliques,
    validate_arrangement,
)
from .instance_gen import GenSpec, generate
from .oracle import brute_force_max_packing, greedy_maximal_packing, verify_packing
from .packing_dp import INFEASIBLE, solve

__all__ = [
    "AdjacencyGraph",
    "CliqueArrangement",
    "GenSpec",
    "INFEASIBLE",
    "Interval",
    "IntervalInstance",
    "MaximalClique",
    "brute_force_max_packing",
    "build_overlap_graph",
    "generate",
    "greedy_maximal_packing",
    "solve",
    "sweep_maximal_cliques",
    "validate_arrangement",
    "verify_packing",
]
