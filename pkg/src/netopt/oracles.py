"""Slow, obviously-correct reference implementations.

These share no code with the fast solvers; the tests and ``--check`` use
them as the independent side of every comparison.
"""
from __future__ import annotations

import heapq
import itertools
import math

import numpy as np

INF = math.inf


def dijkstra_plain(n, edges, src, lat=None):
    """Textbook Dijkstra over ``(u, v, l, ...)`` tuples."""
    adj = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        w = e[2] if lat is None else lat[i]
        adj[e[0]].append((e[1], w))
        adj[e[1]].append((e[0], w))
    dist = [INF] * n
    dist[src] = 0
    pq = [(0, src)]
    while pq:
        d, x = heapq.heappop(pq)
        if d > dist[x]:
            continue
        for y, w in adj[x]:
            if d + w < dist[y]:
                dist[y] = d + w
                heapq.heappush(pq, (d + w, y))
    return dist


def retarget_bruteforce(n, edges, src, sp):
    """Try every parent-edge choice per node; return the cheapest total change or inf.

    ``edges`` are ``(u, v, l, label, lmin)``.  Parent edges become tight,
    every other edge is raised just enough not to shortcut ``sp``.
    """
    others = [v for v in range(n) if v != src and sp[v] < INF]
    cands = []
    for v in others:
        opts = []
        for i, (a, b, _l, _lab, lmin) in enumerate(edges):
            if v not in (a, b):
                continue
            u = b if a == v else a
            if sp[u] <= sp[v] and lmin <= sp[v] - sp[u]:
                opts.append((i, u))
        if not opts:
            return INF
        cands.append(opts)
    best = INF
    for choice in itertools.product(*cands):
        par = dict(zip(others, choice))
        ok = True
        for v in others:
            seen = set()
            x = v
            while x != src:
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                x = par[x][1]
            if not ok:
                break
        if not ok:
            continue
        tight = {i for i, _ in par.values()}
        cost = 0
        for i, (a, b, l, _lab, _lmin) in enumerate(edges):
            gap = abs(sp[a] - sp[b])
            cost += abs(gap - l) if i in tight else max(0, gap - l)
        best = min(best, cost)
    return best


def tree_decrease_bruteforce(n, edges, root, budget):
    """Least achievable max root distance over all decrement vectors with sum <= budget.

    ``edges`` are ``(u, v, l, label, lmin)`` forming a tree.  Vectors are
    built one edge at a time in numpy, discarding partial sums above the
    budget as they appear.
    """
    adj = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        adj[e[0]].append((e[1], i))
        adj[e[1]].append((e[0], i))
    paths = [None] * n
    paths[root] = []
    stack = [root]
    while stack:
        x = stack.pop()
        for y, i in adj[x]:
            if paths[y] is None:
                paths[y] = paths[x] + [i]
                stack.append(y)
    m = len(edges)
    inc = np.zeros((m, n), dtype=np.int64)
    for v in range(n):
        for i in paths[v]:
            inc[i, v] = 1
    base = np.array([e[2] for e in edges], dtype=np.int64)
    vecs = np.zeros((1, 0), dtype=np.int64)
    sums = np.zeros(1, dtype=np.int64)
    for i in range(m):
        room = edges[i][2] - edges[i][4]
        steps = np.arange(min(room, budget) + 1, dtype=np.int64)
        new_sums = (sums[:, None] + steps[None, :]).ravel()
        keep = new_sums <= budget
        rep = np.repeat(vecs, len(steps), axis=0)
        col = np.tile(steps, len(vecs))
        vecs = np.column_stack([rep, col])[keep]
        sums = new_sums[keep]
    if m == 0:
        return 0
    lat = base[None, :] - vecs
    return int((lat @ inc).max(axis=1).min())


def retarget_atmost_bruteforce(n, edges, src, sp):
    """Parent-choice enumeration for the at-most variant on fixed (clamped) targets.

    A parent edge longer than its gap is lowered to the gap; nothing is raised.
    """
    others = [v for v in range(n) if v != src and sp[v] < INF]
    cands = []
    for v in others:
        opts = []
        for i, (a, b, l, _lab, lmin) in enumerate(edges):
            if v not in (a, b):
                continue
            u = b if a == v else a
            gap = sp[v] - sp[u]
            if sp[u] <= sp[v] and (l <= gap or lmin <= gap):
                opts.append((i, u, max(0, l - gap)))
        if not opts:
            return INF
        cands.append(opts)
    best = INF
    for choice in itertools.product(*cands):
        par = dict(zip(others, choice))
        ok = True
        for v in others:
            seen = set()
            x = v
            while x != src:
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                x = par[x][1]
            if not ok:
                break
        if ok:
            best = min(best, sum(c for _i, _u, c in {p[0]: p for p in par.values()}.values()))
    return best


def cluster_enumerate(inst):
    """Best objective over every consecutive partition and every type choice.

    Costs are recomputed from the raw weights and bounds here rather than
    through the solvers' helpers.  Exponential in ``n``.
    """
    n, T, F = inst.n, inst.T, inst.F
    agg = {"sum": sum, "max": max, "min": min}
    ccost = agg[inst.ccost] if isinstance(inst.ccost, str) else inst.ccost

    def cost(j, a, b):
        r = (j - 1) if inst.J > 1 else 0
        per = []
        for t in range(T):
            if not inst.lo[b, r, t] <= a <= inst.hi[b, r, t]:
                per.append(INF)
            else:
                per.append(agg[inst.ctypes[t]](inst.w[a:b + 1, r, t].tolist()))
        return F + ccost(per)

    best = INF
    for mask in range(1 << (n - 1)):
        cuts = [i for i in range(1, n) if mask >> (i - 1) & 1]
        if inst.k is not None and len(cuts) + 1 != inst.k:
            continue
        bounds = [0] + cuts + [n]
        costs = [cost(j if inst.k is not None else 1, bounds[j - 1] + 1, bounds[j])
                 for j in range(1, len(bounds))]
        total = sum(costs) if inst.objf == "sum" else max(costs)
        best = min(best, total)
    return best


def cover_count_bruteforce(y, L):
    """Fewest length-``L`` intervals covering the values ``y`` (greedy from the left)."""
    count, reach = 0, None
    for v in sorted(y):
        if reach is None or v > reach:
            count += 1
            reach = v + L
    return count


def earliest_cover_bruteforce(x, w, L, K):
    """Earliest candidate time with at most ``K`` intervals, testing every pairwise time.

    Candidate times are all ``t >= 0`` at which two points coincide or are
    exactly ``L`` apart, plus ``0``; each is checked from scratch.
    """
    from fractions import Fraction

    n = len(x)
    times = {Fraction(0)}
    for i in range(n):
        for j in range(n):
            if i != j and w[i] != w[j]:
                for s in (0, L, -L):
                    t = Fraction(s - (x[j] - x[i])) / (w[j] - w[i])
                    if t >= 0:
                        times.add(t)
    for t in sorted(times):
        if cover_count_bruteforce([a + b * t for a, b in zip(x, w)], L) <= K:
            return t
    return None


def design3_optimum(n, label):
    """Fewest distinct labels over all double stars: every center edge, every attachment.

    ``label(u, v)`` gives the label of edge ``{u, v}``.  Exponential in ``n``.
    """
    if n <= 2:
        return 1 if n == 2 else 0
    best = INF
    for x in range(n):
        for y in range(x + 1, n):
            rest = [v for v in range(n) if v not in (x, y)]
            for side in itertools.product((x, y), repeat=len(rest)):
                used = {label(x, y)} | {label(c, v) for c, v in zip(side, rest)}
                best = min(best, len(used))
    return best
