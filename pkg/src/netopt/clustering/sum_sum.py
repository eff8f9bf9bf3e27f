"""Sum of clusters, each cluster costing its cheapest per-type weight sum.

Every strategy evaluates ``C(i) = F + min_tc (wp(i) + min_p E(p))`` with
``E(p) = prev(p) - wp(p)`` over ``l(i) - 1 <= p <= u(i) - 1``; they differ
only in how the window minimum is found.  Negative weights are fine.
"""
from __future__ import annotations

import heapq
import math

from ..ds import IndexedHeap, MonotoneDeque, SegTreeAddMinMax
from .common import check_family, nondecreasing, prefix, run_phases, unit_lower
from .instance import ClusterInstance, ClusterSolution

INF = math.inf

STRATEGIES = ("d_table", "e_table_segtree", "deque", "heaps")


def _d_table(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    wp = [prefix(inst.wcol(j, t)) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
    D = [[INF] * (n + 1) for _ in range(T)]
    for i in range(1, n + 1):
        for t in range(T):
            e = prev[i - 1] - wp[t][i - 1]
            D[t][i - 1] = e if i == 1 else min(D[t][i - 2], e)
        best = INF
        for t in range(T):
            u = hi[t][i]
            if u >= 1:
                best = min(best, D[t][u - 1] + wp[t][i])
        cur[i] = best + F


def _e_table(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    wp = [prefix(inst.wcol(j, t)) for t in range(T)]
    lo = [inst.lcol(j, t) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
    trees = [SegTreeAddMinMax([INF] * (n + 1), "min") for _ in range(T)]
    for i in range(1, n + 1):
        best = INF
        for t in range(T):
            trees[t].set(i - 1, prev[i - 1] - wp[t][i - 1])
            a, b = lo[t][i] - 1, hi[t][i] - 1
            if a <= b:
                best = min(best, trees[t].query(a, b) + wp[t][i])
        cur[i] = best + F


def _deque(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    wp = [prefix(inst.wcol(j, t)) for t in range(T)]
    lo = [inst.lcol(j, t) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
    dqs = [MonotoneDeque("min") for _ in range(T)]
    done = [0] * T  # next p to insert
    for i in range(1, n + 1):
        best = INF
        for t in range(T):
            dq, w = dqs[t], wp[t]
            while done[t] <= hi[t][i] - 1:
                p = done[t]
                dq.push(p, prev[p] - w[p])
                done[t] += 1
            dq.evict_below(lo[t][i] - 1)
            f = dq.front()
            if f is not None:
                best = min(best, f[1] + w[i])
        cur[i] = best + F


def _heaps(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    wp = [prefix(inst.wcol(j, t)) for t in range(T)]
    lo = [inst.lcol(j, t) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
    hval = [IndexedHeap() for _ in range(T)]
    hidx: list[list] = [[] for _ in range(T)]
    done = [0] * T
    for i in range(1, n + 1):
        best = INF
        for t in range(T):
            while done[t] <= hi[t][i] - 1:
                p = done[t]
                hval[t].push(p, (prev[p] - wp[t][p], p))
                heapq.heappush(hidx[t], p)
                done[t] += 1
            while hidx[t] and hidx[t][0] < lo[t][i] - 1:
                hval[t].remove(heapq.heappop(hidx[t]))
            if hval[t]:
                best = min(best, hval[t].peek()[0][0] + wp[t][i])
        cur[i] = best + F


def cluster_sum_sum(inst: ClusterInstance, strategy: str = "deque") -> ClusterSolution:
    check_family(inst, "sum", "sum", strategy, STRATEGIES)
    if strategy == "d_table":
        unit_lower(inst, strategy)
        solver = _d_table
    elif strategy == "e_table_segtree":
        solver = _e_table
    else:
        nondecreasing(inst, strategy, "l")
        nondecreasing(inst, strategy, "u")
        solver = _deque if strategy == "deque" else _heaps
    return run_phases(inst, solver)
