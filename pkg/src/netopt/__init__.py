"""Offline network optimisation: backup paths, latency changes, design, clustering, mobile cover."""
from __future__ import annotations

from .backup import backup_all
from .clustering import ClusterInstance, cluster_generic, solve
from .design import diameter3_design, kregular_even, kregular_general
from .graph import Edge, Graph, parse_graph
from .latency import RootedTree, retarget_atmost, retarget_exact, tree_decrease_binary, tree_decrease_unit
from .mobile import LineSet, earliest_cover_time

__version__ = "0.1.0"

__all__ = [
    "ClusterInstance",
    "Edge",
    "Graph",
    "LineSet",
    "RootedTree",
    "backup_all",
    "cluster_generic",
    "diameter3_design",
    "earliest_cover_time",
    "kregular_even",
    "kregular_general",
    "parse_graph",
    "retarget_atmost",
    "retarget_exact",
    "solve",
    "tree_decrease_binary",
    "tree_decrease_unit",
]
