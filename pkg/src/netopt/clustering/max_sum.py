"""Largest cluster cost, each cluster costing its cheapest per-type weight sum.

For a previous boundary ``p`` the cluster ``[p+1, i]`` costs
``max(prev(p), F + wp(i) - wp(p))``.  While ``i <= r(p)`` (the last point
for which the second term does not exceed the first) the cost is
``prev(p)``; afterwards it is ``F + wp(i) - wp(p)``.  The strategies track
the live boundaries (candidate ``V``) and the expired ones (candidate
``F + U``) separately.
"""
from __future__ import annotations

import math

from ..ds import MonotoneDeque, RangeTree2D
from .common import (
    check_family,
    full_upper,
    nondecreasing,
    prefix,
    run_phases,
    same_across_clusters,
    unit_lower,
)
from .instance import ClusterInstance, ClusterSolution, _first, evaluate

INF = math.inf

STRATEGIES = ("binary_search", "pointer_deque", "range_trees")


class LimitTracker:
    """``r(p)``: last ``r >= p + 1`` with ``fits(p, r)``, or ``p`` if none.

    ``fits`` must be monotone in ``r``.  Consecutive queries whose row
    values do not decrease reuse the previous answer as a starting point
    and walk forward; any other query falls back to binary search.
    """

    def __init__(self, n: int, prev: list, fits):
        self.n, self.prev, self.fits = n, prev, fits
        self.last = None  # (p, r)

    def __call__(self, p: int) -> int:
        n, prev, fits = self.n, self.prev, self.fits
        if prev[p] == INF:
            r = n
        else:
            if self.last is not None and self.last[0] == p - 1 and prev[p - 1] <= prev[p]:
                r = max(self.last[1], p)
            else:
                r = _first(p + 1, n, lambda q: not fits(p, q)) - 1
            while r < n and fits(p, r + 1):
                r += 1
        self.last = (p, r)
        return r


def _greedy(w, T, n, budget, agg):
    """Fewest clusters with some type's aggregate within ``budget``; None if a point fits no type."""
    clusters = []
    acc = None
    start = 1
    for i in range(1, n + 1):
        nxt = None
        if acc is not None:
            nxt = [INF if a == INF else agg(a, w[t][i]) for t, a in enumerate(acc)]
            nxt = [a if a <= budget else INF for a in nxt]
            if all(a == INF for a in nxt):
                clusters.append((start, i - 1, min(range(T), key=acc.__getitem__)))
                start = i
                nxt = None
        if nxt is None:
            nxt = [w[t][i] if w[t][i] <= budget else INF for t in range(T)]
            if all(a == INF for a in nxt):
                return None
        acc = nxt
    clusters.append((start, n, min(range(T), key=acc.__getitem__)))
    return clusters


def _split_to(clusters: list, k: int) -> list:
    """Break clusters apart (keeping their types) until there are ``k``."""
    out = list(clusters)
    q = 0
    while len(out) < k:
        a, b, t = out[q]
        if a < b:
            out[q:q + 1] = [(a, b - 1, t), (b, b, t)]
        else:
            q += 1
    return out


def greedy_search(inst: ClusterInstance, candidates=None, agg=None, eps=None) -> ClusterSolution:
    """Binary search on the objective with the greedy feasibility test.

    ``candidates`` (sorted) makes the search exact over a finite set;
    otherwise integer instances bisect over integers and real ones stop
    within ``eps`` (default ``1e-9`` of the weight scale).
    """
    n, T, F = inst.n, inst.T, inst.F
    k = inst.k if inst.k is not None else n
    w = [inst.wcol(1, t) for t in range(T)]
    agg = agg or (lambda a, b: a + b)

    def fits(budget):
        cl = _greedy(w, T, n, budget, agg)
        return cl if cl is not None and len(cl) <= k else None

    approx = None
    if candidates is not None:
        lo, hi = 0, len(candidates) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if fits(candidates[mid] - F) is not None:
                hi = mid
            else:
                lo = mid + 1
        found = fits(candidates[hi] - F)
    else:
        # search the per-cluster budget rather than F + budget, so a real F
        # cannot round the top of the range below the total weight
        top = min(sum(col[1:]) for col in w)
        if inst.integral():
            lo, hi = 0, int(top)
            while lo < hi:
                mid = (lo + hi) // 2
                if fits(mid) is not None:
                    hi = mid
                else:
                    lo = mid + 1
        else:
            approx = eps if eps is not None else 1e-9 * max(abs(F + top), 1.0)
            lo, hi = 0.0, float(top)
            while hi - lo > approx:
                mid = (lo + hi) / 2
                if fits(mid) is not None:
                    hi = mid
                else:
                    lo = mid
        found = fits(hi)
    clusters = _split_to(found, k)
    return ClusterSolution(evaluate(inst, clusters), clusters, None, approx)


def _pointer_deque(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    wp = [prefix(inst.wcol(j, t)) for t in range(T)]
    lo = [inst.lcol(j, t) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
    dqs = [MonotoneDeque("min", pop_equal=True) for _ in range(T)]
    smax = [MonotoneDeque("max", pop_equal=True) for _ in range(T)]
    limit = [LimitTracker(n, prev, lambda p, r, c=wp[t]: F + c[r] - c[p] <= prev[p]) for t in range(T)]
    done = [0] * T
    for i in range(1, n + 1):
        V = U = INF
        for t in range(T):
            dq, sm, c = dqs[t], smax[t], wp[t]
            while done[t] <= hi[t][i] - 1:
                p = done[t]
                dq.push(p, prev[p], limit[t](p))
                done[t] += 1
            dq.evict_below(lo[t][i] - 1)
            sm.evict_below(lo[t][i] - 1)
            for p, _v, _r in dq.evict_while(lambda e: e[2] < i):
                sm.push(p, c[p])
            f = dq.front()
            if f is not None:
                V = min(V, f[1])
            g = sm.front()
            if g is not None:
                U = min(U, c[i] - g[1])
        cur[i] = min(V, F + U)


def _range_trees(inst, j, prev, cur):
    n, T, F = inst.n, inst.T, inst.F
    wp = [prefix(inst.wcol(j, t)) for t in range(T)]
    lo = [inst.lcol(j, t) for t in range(T)]
    hi = [inst.ucol(j, t) for t in range(T)]
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
            c = wp[t]
            while done[t] <= hi[t][i] - 1:
                p = done[t]
                if prev[p] == INF:
                    r = n
                else:
                    r = _first(p + 1, n, lambda q: F + c[q] - c[p] > prev[p]) - 1
                A[t].delete(p, -INF)
                B[t].delete(p, -INF)
                A[t].insert(p, r, prev[p])
                B[t].insert(p, r, c[p])
                done[t] += 1
            a, b = lo[t][i] - 1, hi[t][i] - 1
            V = min(V, A[t].find_min_w(a, i, b, INF))
            U = min(U, c[i] - B[t].find_max_w(a, -INF, b, i - 1))
        cur[i] = min(V, F + U)


def cluster_max_sum(inst: ClusterInstance, strategy: str = "pointer_deque", eps=None) -> ClusterSolution:
    check_family(inst, "max", "sum", strategy, STRATEGIES)
    if strategy == "binary_search":
        unit_lower(inst, strategy)
        full_upper(inst, strategy)
        same_across_clusters(inst, strategy)
        return greedy_search(inst, eps=eps)
    if strategy == "pointer_deque":
        nondecreasing(inst, strategy, "l")
        nondecreasing(inst, strategy, "u")
        return run_phases(inst, _pointer_deque)
    return run_phases(inst, _range_trees)
