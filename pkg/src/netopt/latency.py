"""Latency changes under QoS constraints.

Two problems live here:

* retargeting: change edge latencies at minimum total absolute change so
  the source distances equal (``exact``) or do not exceed (``atmost``) a
  prescribed vector, never going below ``lmin``;
* budgeted decrease on a rooted tree: spend at most ``C`` latency units to
  minimise the largest root-to-vertex distance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .ds import IndexedHeap, SegTreeAddMinMax, SegTreeAssign
from .graph import Graph, dijkstra

INF = math.inf


@dataclass
class RetargetResult:
    feasible: bool
    latencies: list
    cost: object
    targets: list
    parent_edge: list = field(default_factory=list)


def retarget(g: Graph, src: int, targets, mode: str = "exact") -> RetargetResult:
    """Minimum-change latencies realising ``targets`` as source distances.

    Nodes are swept in ``(target, cost, id)`` order; each picks the cheapest
    edge from an already-swept node that can be made tight.  Within a group
    of equal targets this is Prim's algorithm on the cost of zeroing an edge,
    so the chosen parent tree is the cheapest one.

    In ``atmost`` mode the targets are first clamped to the current
    distances and no edge is ever raised: a parent edge costs
    ``max(0, l - gap)`` and is lowered only when it is too long.  The
    clamped targets are fixed potentials, so this mode can report an
    instance infeasible even when lowering an edge high in the tree would
    satisfy every bound.
    """
    if mode not in ("exact", "atmost"):
        raise ValueError("mode must be 'exact' or 'atmost'")
    n = g.n
    if len(targets) != n:
        raise ValueError(f"expected {n} targets, got {len(targets)}")
    if not 0 <= src < n:
        raise ValueError(f"source {src} outside 0..{n - 1}")
    if targets[src] != 0:
        raise ValueError("target distance of the source must be 0")
    if any(t < 0 for t in targets):
        raise ValueError("target distances must be non-negative")

    lat = [e.l for e in g.edges]
    if mode == "atmost":
        splen = dijkstra(g, src)
        sp = [min(t, s) for t, s in zip(targets, splen)]
    else:
        if any(t == INF for t in targets):
            raise ValueError("exact targets must be finite")
        sp = list(targets)
        for eid, e in enumerate(g.edges):
            lo, hi = sorted((sp[e.u], sp[e.v]))
            if lo + lat[eid] < hi:
                lat[eid] = hi - lo

    cost = [INF] * n
    cost[src] = 0
    pedge: list = [None] * n
    extracted = [False] * n
    heap = IndexedHeap((v, (sp[v], cost[v], v)) for v in range(n) if sp[v] < INF)
    while heap:
        _, u = heap.pop()
        extracted[u] = True
        for v, eid in g.adj[u]:
            if extracted[v] or sp[u] > sp[v] or sp[v] == INF:
                continue
            gap = sp[v] - sp[u]
            e = g.edges[eid]
            if e.lmin > gap:
                continue
            c = lat[eid] - gap
            if mode == "atmost":
                c = max(c, 0)
            if c < cost[v]:
                cost[v] = c
                pedge[v] = eid
                heap.update(v, (sp[v], c, v))

    feasible = all(cost[v] < INF for v in range(n) if sp[v] < INF)
    for v in range(n):
        eid = pedge[v]
        if eid is None:
            continue
        e = g.edges[eid]
        gap = abs(sp[e.u] - sp[e.v])
        lat[eid] = gap if mode == "exact" else min(lat[eid], gap)
    total = sum(abs(a - e.l) for a, e in zip(lat, g.edges))
    return RetargetResult(feasible, lat, total if feasible else INF, sp, pedge)


def retarget_exact(g: Graph, src: int, targets) -> RetargetResult:
    return retarget(g, src, targets, "exact")


def retarget_atmost(g: Graph, src: int, targets) -> RetargetResult:
    return retarget(g, src, targets, "atmost")


class RootedTree:
    """A tree graph rooted at ``root`` with DFS intervals over its vertices.

    Per-vertex ``lat``/``lmin`` describe the edge to the parent.
    """

    def __init__(self, g: Graph, root: int = 0):
        n = g.n
        if g.m != n - 1:
            raise ValueError(f"a tree on {n} vertices needs {n - 1} edges, got {g.m}")
        if not 0 <= root < n:
            raise ValueError(f"root {root} outside 0..{n - 1}")
        self.g = g
        self.n = n
        self.root = root
        self.parent: list = [None] * n
        self.pedge: list = [None] * n
        self.children: list[list[int]] = [[] for _ in range(n)]
        seen = [False] * n
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y, eid in sorted(g.adj[x]):
                if not seen[y]:
                    seen[y] = True
                    self.parent[y], self.pedge[y] = x, eid
                    self.children[x].append(y)
                    stack.append(y)
        if not all(seen):
            raise ValueError("tree is not connected")
        self.lat = [0] * n
        self.lmin = [0] * n
        for v in range(n):
            if self.pedge[v] is not None:
                e = g.edges[self.pedge[v]]
                self.lat[v], self.lmin[v] = e.l, e.lmin
        self.order: list[int] = []
        self.num = [0] * n
        self.last = [0] * n
        self.dist = [0] * n
        stack = [(root, 0)]
        while stack:
            x, i = stack.pop()
            if i == 0:
                self.num[x] = len(self.order)
                self.order.append(x)
            if i < len(self.children[x]):
                stack.append((x, i + 1))
                c = self.children[x][i]
                self.dist[c] = self.dist[x] + self.lat[c]
                stack.append((c, 0))
            else:
                self.last[x] = len(self.order) - 1

    def latencies(self, per_vertex) -> list:
        """Edge-indexed latency list from per-vertex parent-edge values."""
        out = [e.l for e in self.g.edges]
        for v in range(self.n):
            if self.pedge[v] is not None:
                out[self.pedge[v]] = per_vertex[v]
        return out


@dataclass
class TreeDecreaseResult:
    max_distance: object
    cost: object
    latencies: list


def _frontier(tree: RootedTree) -> SegTreeAssign:
    b = SegTreeAssign(tree.n)
    for s in tree.children[tree.root]:
        b.assign(tree.num[s], tree.last[s], s)
    return b


def _push(tree: RootedTree, b: SegTreeAssign, x: int) -> None:
    for s in tree.children[x]:
        b.assign(tree.num[s], tree.last[s], s)


def tree_decrease_unit(tree: RootedTree, budget) -> TreeDecreaseResult:
    """Spend the budget one unit at a time on the deepest vertex's path.

    Each unit goes to the topmost edge on the path to the current deepest
    vertex that can still be lowered; the search stops early once that path
    is saturated all the way down.  Integer latencies only.
    """
    if any(not isinstance(x, int) for x in tree.lat + tree.lmin) or not isinstance(budget, int):
        raise TypeError("unit-decrement strategy needs integer latencies and budget")
    a = SegTreeAddMinMax([tree.dist[v] for v in tree.order], "max")
    b = _frontier(tree)
    lat = list(tree.lat)
    spent = 0
    while spent < budget:
        i = a.argbest()
        v = tree.order[i]
        if v == tree.root:
            break
        x = b.point_query(i)
        if lat[x] > tree.lmin[x]:
            lat[x] -= 1
            a.range_add(tree.num[x], tree.last[x], -1)
            spent += 1
        elif x == v:
            break
        else:
            _push(tree, b, x)
    return TreeDecreaseResult(a.query(0, tree.n - 1), spent, tree.latencies(lat))


def _feasible(tree: RootedTree, budget, target):
    """Top-down repair of every vertex deeper than ``target``; None if infeasible."""
    a = SegTreeAddMinMax([tree.dist[v] for v in tree.order], "max")
    b = _frontier(tree)
    lat = list(tree.lat)
    spent = 0
    for i, v in enumerate(tree.order):
        cd = a.point_query(i)
        while cd > target:
            x = b.point_query(i)
            dec = min(cd - target, lat[x] - tree.lmin[x])
            if dec > 0:
                lat[x] -= dec
                spent += dec
                if spent > budget:
                    return None
                a.range_add(tree.num[x], tree.last[x], -dec)
                cd = a.point_query(i)
            if lat[x] == tree.lmin[x]:
                if x == v and cd > target:
                    return None
                _push(tree, b, x)
    return spent, lat


def tree_decrease_binary(tree: RootedTree, budget, eps=None) -> TreeDecreaseResult:
    """Binary search on the largest allowed distance.

    Integer instances are searched exactly; otherwise ``eps`` (default
    ``1e-9`` times the initial depth) bounds the gap to the optimum.
    """
    dmax = max(tree.dist)
    integral = all(isinstance(x, int) for x in tree.lat + tree.lmin)
    lo, hi = 0, dmax
    best = _feasible(tree, budget, hi)
    if integral:
        while lo < hi:
            mid = (lo + hi) // 2
            r = _feasible(tree, budget, mid)
            if r is not None:
                hi, best = mid, r
            else:
                lo = mid + 1
    else:
        tol = eps if eps is not None else 1e-9 * max(dmax, 1)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            r = _feasible(tree, budget, mid)
            if r is not None:
                hi, best = mid, r
            else:
                lo = mid
    spent, lat = best
    return TreeDecreaseResult(hi, spent, tree.latencies(lat))
