"""Undirected latency graphs, shortest-path trees and O(1) ancestor queries."""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

INF = math.inf


class GraphFormatError(ValueError):
    """Malformed graph text; the message names the offending line."""


class Edge(NamedTuple):
    u: int
    v: int
    l: int
    label: int = 1
    lmin: int = 0

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


class Graph:
    """Weighted undirected multigraph on nodes ``0..n-1``.

    Edges are stored once and indexed by position; ``adj[x]`` lists
    ``(neighbor, edge_id)`` pairs so parallel edges stay distinguishable.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence] = ()):
        if n < 0:
            raise ValueError("node count must be non-negative")
        self.n = n
        self.edges: list[Edge] = []
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e in edges:
            self._add(Edge(*e))

    def _add(self, e: Edge) -> None:
        if not (0 <= e.u < self.n and 0 <= e.v < self.n):
            raise ValueError(f"edge ({e.u},{e.v}) has an endpoint outside 0..{self.n - 1}")
        if e.u == e.v:
            raise ValueError(f"self-loop on node {e.u} is not allowed")
        if e.l < 0 or e.lmin < 0:
            raise ValueError("latencies must be non-negative")
        if e.lmin > e.l:
            raise ValueError(f"edge ({e.u},{e.v}): lmin {e.lmin} exceeds latency {e.l}")
        eid = len(self.edges)
        self.edges.append(e)
        self.adj[e.u].append((e.v, eid))
        self.adj[e.v].append((e.u, eid))

    @property
    def m(self) -> int:
        return len(self.edges)

    def with_latencies(self, latencies: Sequence) -> "Graph":
        """Copy of the graph with edge ``i`` re-weighted to ``latencies[i]``."""
        return Graph(
            self.n,
            (Edge(e.u, e.v, lat, e.label, min(e.lmin, lat)) for e, lat in zip(self.edges, latencies)),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse the line format ``n m`` followed by ``u v l [label] [lmin]`` rows."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("line 1: empty graph file")
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphFormatError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: 'n m' must be integers") from None
    if len(rows) - 1 != m:
        last = rows[-1][0]
        raise GraphFormatError(f"line {last}: header declares {m} edges, found {len(rows) - 1}")
    g = Graph(n)
    for lineno, tok in rows[1:]:
        if not 3 <= len(tok) <= 5:
            raise GraphFormatError(f"line {lineno}: expected 'u v l [label] [lmin]'")
        try:
            vals = [int(t) for t in tok]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field") from None
        vals += [1, 0][len(vals) - 3:]
        try:
            g._add(Edge(*vals))
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    return g


def format_graph(g: Graph, with_extras: bool = False) -> str:
    lines = [f"{g.n} {g.m}"]
    for e in g.edges:
        if with_extras:
            lines.append(f"{e.u} {e.v} {e.l} {e.label} {e.lmin}")
        else:
            lines.append(f"{e.u} {e.v} {e.l}")
    return "\n".join(lines) + "\n"


def dijkstra(g: Graph, src: int, skip_edge: int = -1, latencies: Sequence | None = None) -> list:
    """Plain distances from ``src``; ``skip_edge`` is treated as deleted."""
    lat = latencies if latencies is not None else [e.l for e in g.edges]
    dist = [INF] * g.n
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist[x]:
            continue
        for y, eid in g.adj[x]:
            if eid == skip_edge:
                continue
            nd = d + lat[eid]
            if nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


class SparseTableLCA:
    """Euler tour + sparse table; O(n log n) build, O(1) query."""

    def __init__(self, children: list[list[int]], root: int, level: list[int]):
        euler: list[int] = []
        first: dict[int, int] = {}
        stack = [(root, 0)]
        while stack:
            x, i = stack.pop()
            if i == 0:
                first[x] = len(euler)
            euler.append(x)
            if i < len(children[x]):
                stack.append((x, i + 1))
                stack.append((children[x][i], 0))
        self.first = first
        self.euler = euler
        self.level = level
        size = len(euler)
        table = [euler]
        span = 1
        while 2 * span <= size:
            prev = table[-1]
            row = []
            for i in range(size - 2 * span + 1):
                a, b = prev[i], prev[i + span]
                row.append(a if level[a] <= level[b] else b)
            table.append(row)
            span *= 2
        self.table = table

    def query(self, u: int, v: int) -> int:
        i, j = self.first[u], self.first[v]
        if i > j:
            i, j = j, i
        k = (j - i + 1).bit_length() - 1
        a, b = self.table[k][i], self.table[k][j - (1 << k) + 1]
        return a if self.level[a] <= self.level[b] else b


@dataclass(eq=False)
class SptInfo:
    """Shortest-path tree rooted at ``src`` with DFS-interval bookkeeping.

    Unreachable nodes have ``SP = inf``, ``parent = None`` and ``DFSnum = -1``.
    ``parent_edge[d]`` is the id of the tree edge ``(parent(d), d)``.
    """

    src: int
    SP: list
    parent: list
    parent_edge: list
    level: list
    DFSnum: list
    DFSmax: list
    children: list
    order: list  # nodes by DFS number
    _lca: SparseTableLCA = field(repr=False)

    def in_tree(self, d: int) -> bool:
        return self.DFSnum[d] >= 0

    def _check(self, *nodes: int) -> None:
        for x in nodes:
            if not (0 <= x < len(self.SP)) or self.DFSnum[x] < 0:
                raise KeyError(f"node {x} not in tree")

    def lca(self, u: int, v: int) -> int:
        self._check(u, v)
        return self._lca.query(u, v)

    def is_ancestor(self, a: int, u: int) -> bool:
        self._check(a, u)
        return self.DFSnum[a] <= self.DFSnum[u] <= self.DFSmax[a]

    def tree_path(self, d: int) -> list[int]:
        """Nodes on the tree path ``src .. d``."""
        path = [d]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path


def shortest_path_tree(g: Graph, src: int) -> SptInfo:
    """Dijkstra from ``src``.

    Among equal-length alternatives the parent of ``d`` is the smallest-id
    node settled before ``d``; settle order is ``(distance, id)``, so the
    result is deterministic and acyclic even with zero-latency edges.
    """
    if not 0 <= src < g.n:
        raise ValueError(f"source {src} outside 0..{g.n - 1}")
    n = g.n
    dist = [INF] * n
    done = [False] * n
    parent: list = [None] * n
    pedge: list = [None] * n
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        d, x = heapq.heappop(heap)
        if done[x] or d > dist[x]:
            continue
        done[x] = True
        for y, eid in g.adj[x]:
            if done[y]:
                continue
            nd = d + g.edges[eid].l
            if nd < dist[y]:
                dist[y] = nd
                parent[y], pedge[y] = x, eid
                heapq.heappush(heap, (nd, y))
            elif nd == dist[y] and x < parent[y]:
                parent[y], pedge[y] = x, eid

    children: list[list[int]] = [[] for _ in range(n)]
    for y in range(n):
        if parent[y] is not None:
            children[parent[y]].append(y)
    level = [0] * n
    dfsnum = [-1] * n
    dfsmax = [-1] * n
    order: list[int] = []
    stack = [(src, 0)]
    while stack:
        x, i = stack.pop()
        if i == 0:
            dfsnum[x] = len(order)
            order.append(x)
        if i < len(children[x]):
            stack.append((x, i + 1))
            c = children[x][i]
            level[c] = level[x] + 1
            stack.append((c, 0))
        else:
            dfsmax[x] = len(order) - 1
    return SptInfo(
        src=src,
        SP=dist,
        parent=parent,
        parent_edge=pedge,
        level=level,
        DFSnum=dfsnum,
        DFSmax=dfsmax,
        children=children,
        order=order,
        _lca=SparseTableLCA(children, src, level),
    )


def lca(spt: SptInfo, u: int, v: int) -> int:
    return spt.lca(u, v)


def is_ancestor(spt: SptInfo, a: int, u: int) -> bool:
    return spt.is_ancestor(a, u)
