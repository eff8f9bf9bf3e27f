"""Consecutive clustering of points on a line."""
from .generic import cluster_generic
from .instance import (
    ClusterInstance,
    ClusterSolution,
    PreconditionError,
    cluster_cost,
    derive_bounds,
    evaluate,
)
from .sum_sum import cluster_sum_sum
from .max_max import cluster_max_max
from .max_sum import cluster_max_sum
from .sum_max import cluster_sum_max

FAMILIES = {
    ("sum", "sum"): (cluster_sum_sum, ("d_table", "e_table_segtree", "deque", "heaps")),
    ("sum", "max"): (cluster_sum_max, ("stacks", "deque_heap")),
    ("max", "sum"): (cluster_max_sum, ("binary_search", "pointer_deque", "range_trees")),
    ("max", "max"): (cluster_max_max, ("binary_search_sorted", "pointer_rmq", "range_trees_rmq")),
}


def solve(inst: ClusterInstance, strategy: str = "generic") -> ClusterSolution:
    """Dispatch to ``cluster_generic`` or the specialised solver owning ``strategy``."""
    if strategy == "generic":
        return cluster_generic(inst)
    for fn, names in FAMILIES.values():
        if strategy in names:
            return fn(inst, strategy)
    valid = ["generic"] + [s for _, names in FAMILIES.values() for s in names]
    raise ValueError(f"unknown strategy {strategy!r}; valid: {', '.join(valid)}")
