"""Largest cluster cost, each cluster costing its cheapest per-type maximum weight.

Same live/expired split as the max-sum case, with the span maximum taken
from a sparse table instead of prefix sums; an expired boundary is best
represented by the largest expired index.
"""
from __future__ import annotations

import math

from ..ds import MonotoneDeque, RangeTree2D, SparseRMQ
from .common import check_family, full_upper, nondecreasing, run_phases, same_across_clusters, unit_lower
from .instance import ClusterInstance, ClusterSolution, _first
from .max_sum import LimitTracker, greedy_search

INF = math.inf

STRATEGIES = ("binary_search_sorted", "pointer_rmq", "range_trees_rmq")


def _pointer_rmq(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    lo = [inst.lcol(j, t) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
    rmq = [SparseRMQ(inst.wcol(j, t)) for t in range(T)]
    dqs = [MonotoneDeque("min", pop_equal=True) for _ in range(T)]
    smax = [-1] * T
    limit = [LimitTracker(n, prev, lambda p, r, q=rmq[t]: F + q.query_max(p + 1, r) <= prev[p])
             for t in range(T)]
    done = [0] * T
    for i in range(1, n + 1):
        V = U = INF
        for t in range(T):
            dq = dqs[t]
            while done[t] <= hi[t][i] - 1:
                p = done[t]
                dq.push(p, prev[p], limit[t](p))
                done[t] += 1
            dq.evict_below(lo[t][i] - 1)
            for p, _v, _r in dq.evict_while(lambda e: e[2] < i):
                smax[t] = max(smax[t], p)
            f = dq.front()
            if f is not None:
                V = min(V, f[1])
            if smax[t] >= lo[t][i] - 1 and smax[t] >= 0:
                U = min(U, rmq[t].query_max(smax[t] + 1, i))
        cur[i] = min(V, F + U)


def _range_trees_rmq(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    lo = [inst.lcol(j, t) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
    rmq = [SparseRMQ(inst.wcol(j, t)) for t in range(T)]
    A = [RangeTree2D(n + 1) for _ in range(T)]
    B = [RangeTree2D(n + 1) for _ in range(T)]
    for t in range(T):
        for p in range(n + 1):
            A[t].insert(p, -INF, INF)
            B[t].insert(p, -INF, -INF)
    done = [0] * T
    for i in range(1, n + 1):
        V = U = INF
        for t in range(T):
            q = rmq[t]
            while done[t] <= hi[t][i] - 1:
                p = done[t]
                if prev[p] == INF:
                    r = n
                else:
                    r = _first(p + 1, n, lambda s: F + q.query_max(p + 1, s) > prev[p]) - 1
                A[t].delete(p, -INF)
                B[t].delete(p, -INF)
                A[t].insert(p, r, prev[p])
                B[t].insert(p, r, p)
                done[t] += 1
            a, b = lo[t][i] - 1, hi[t][i] - 1
            V = min(V, A[t].find_min_w(a, i, b, INF))
            m = B[t].find_max_w(a, -INF, b, i - 1)
            if m >= 0:
                U = min(U, q.query_max(m + 1, i))
        cur[i] = min(V, F + U)


def cluster_max_max(inst: ClusterInstance, strategy: str = "pointer_rmq") -> ClusterSolution:
    check_family(inst, "max", "max", strategy, STRATEGIES)
    if strategy == "binary_search_sorted":
        unit_lower(inst, strategy)
        full_upper(inst, strategy)
        same_across_clusters(inst, strategy)
        cands = sorted({v + inst.F for v in inst.w[1:, 0, :].ravel().tolist()})
        return greedy_search(inst, candidates=cands, agg=max)
    if strategy == "pointer_rmq":
        nondecreasing(inst, strategy, "l")
        nondecreasing(inst, strategy, "u")
        return run_phases(inst, _pointer_rmq)
    return run_phases(inst, _range_trees_rmq)
