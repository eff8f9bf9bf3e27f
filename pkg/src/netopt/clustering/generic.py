"""Quadratic dynamic program valid for every objective, aggregate and bound."""
from __future__ import annotations

import math

from .instance import AGG, ClusterInstance, ClusterSolution

INF = math.inf


def cluster_generic(inst: ClusterInstance) -> ClusterSolution:
    """Exact optimum in O(n^2 k T), walking each cluster's start leftwards.

    A type whose bounds exclude the current start contributes +inf to
    ``ccost``, so infeasibility propagates through ``objf`` untouched.
    """
    n, T, F = inst.n, inst.T, inst.F
    cc = inst.ccost_fn()
    pick = inst.ccost == "min"
    objf = (lambda a, b: a + b) if inst.objf == "sum" else max
    aggs = [AGG[c] for c in inst.ctypes]
    pair = [(lambda a, b, f=f: f((a, b))) for f in aggs]
    fixed = inst.k is not None
    K = inst.k if fixed else 1
    rows = [[INF] * (n + 1) for _ in range(K + 1)]
    rows[0][0] = inst.base
    back = [[None] * (n + 1) for _ in range(K + 1)]
    if not fixed:
        rows[1][0] = inst.base
    for j in range(1, K + 1):
        jw = inst.jw(j)
        w = [inst.w[:, jw, t].tolist() for t in range(T)]
        lo = [inst.lo[:, jw, t].tolist() for t in range(T)]
        hi = [inst.hi[:, jw, t].tolist() for t in range(T)]
        prev = rows[j - 1] if fixed else rows[1]
        cur = rows[j]
        first = j if fixed else 1
        for i in range(first, n + 1):
            best, arg = INF, None
            tcagg = [None] * T
            for p in range(i, first - 1, -1):
                tc2 = [INF] * T
                for t in range(T):
                    v = w[t][p]
                    tcagg[t] = v if tcagg[t] is None else pair[t](tcagg[t], v)
                    if lo[t][i] <= p <= hi[t][i]:
                        tc2[t] = tcagg[t]
                c = cc(tc2)
                if prev[p - 1] == INF or c == INF:
                    continue
                val = objf(prev[p - 1], F + c)
                if val < best:
                    tsel = min(range(T), key=tc2.__getitem__) if pick else None
                    best, arg = val, (p, tsel)
            cur[i] = best
            back[j][i] = arg
    value = rows[K][n]
    clusters = []
    if value < INF:
        i, j = n, K
        while i > 0:
            p, tc = back[j][i]
            clusters.append((p, i, tc))
            i = p - 1
            if fixed:
                j -= 1
        clusters.reverse()
    table = rows if fixed else [rows[1]]
    return ClusterSolution(value, clusters, table)
