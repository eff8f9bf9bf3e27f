"""Sum of clusters, each costing its cheapest per-type maximum weight; ``u(i) = i``.

A stack (or deque) per type holds runs of cluster starts sharing the same
suffix maximum ``vmax``; ``pcmin`` is the best previous row value over the
run.  Pushing point ``i`` folds every run whose maximum it dominates.
"""
from __future__ import annotations

import math

from ..ds import IndexedHeap, MonotoneDeque, SegTreeAddMinMax
from .common import check_family, full_upper, nondecreasing, run_phases, unit_lower
from .instance import ClusterInstance, ClusterSolution

INF = math.inf

STRATEGIES = ("stacks", "deque_heap")


def _stacks(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    w = [inst.wcol(j, t) for t in range(T)]
    stacks: list[list] = [[] for _ in range(T)]
    for i in range(1, n + 1):
        best = INF
        for t in range(T):
            s = stacks[t]
            vmax, pcmin = w[t][i], prev[i - 1]
            while s and s[-1][1] <= vmax:
                pcmin = min(pcmin, s.pop()[2])
            smin = vmax + pcmin
            if s:
                smin = min(smin, s[-1][3])
            s.append((i, vmax, pcmin, smin))
            best = min(best, smin)
        cur[i] = best + F


def _deque_heap(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    w = [inst.wcol(j, t) for t in range(T)]
    lo = [inst.lcol(j, t) for t in range(T)]
    dqs = [MonotoneDeque("max", pop_equal=True) for _ in range(T)]
    heap = IndexedHeap()
    st = SegTreeAddMinMax([INF] * (n + 1), "min")
    for i in range(1, n + 1):
        st.set(i - 1, prev[i - 1])
        for t in range(T):
            dq = dqs[t]
            cell = [prev[i - 1]]
            for idx, _v, c in dq.push(i, w[t][i], cell):
                cell[0] = min(cell[0], c[0])
                heap.remove((t, idx))
            heap.push((t, i), w[t][i] + cell[0])
            for idx, _v, _c in dq.evict_below(lo[t][i]):
                heap.remove((t, idx))
            f = dq.front()
            if f is not None:
                a, b = lo[t][i] - 1, f[0] - 1
                f[2][0] = st.query(a, b) if a <= b else INF
                heap.update((t, f[0]), f[1] + f[2][0])
        cur[i] = heap.peek()[0] + F


def cluster_sum_max(inst: ClusterInstance, strategy: str = "stacks") -> ClusterSolution:
    check_family(inst, "sum", "max", strategy, STRATEGIES)
    full_upper(inst, strategy)
    if strategy == "stacks":
        unit_lower(inst, strategy)
        return run_phases(inst, _stacks)
    nondecreasing(inst, strategy, "l")
    return run_phases(inst, _deque_heap)
