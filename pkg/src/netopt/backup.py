"""Backup shortest paths when the last edge towards each destination fails.

For a destination ``d`` with tree edge ``(parent(d), d)``, every candidate
backup path leaves the tree at some ancestor of ``d``, crosses one non-tree
edge ``(u, v)`` with ``u`` outside the subtree ``T(d)`` and ``v`` inside it,
then climbs the tree from ``v`` to ``d``.  The four strategies below compute
the minimum of ``SP(u) + l(u, v) + SP(v) - SP(d)`` over such edges in
different ways; ``naive`` instead deletes the edge and reruns Dijkstra.

Parallel edges are handled by identity: only the specific tree edge of ``d``
is excluded, so a parallel copy of it is a legitimate backup.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra as _csgraph_dijkstra

from .ds import MultisetMinSegTree, RangeTree2D
from .graph import Graph, SptInfo, shortest_path_tree

INF = math.inf

STRATEGIES = ("naive", "bottom_up", "range_tree", "segtree_lists")


@dataclass
class BackupResult:
    BP: list
    paths: list  # node sequence per destination, None when BP is infinite
    spt: SptInfo


def _crossing_edges(g: Graph, spt: SptInfo, d: int):
    """Edges ``(u, d)`` usable as the last non-tree hop into ``d``.

    Yields ``(u, eid, lca)``; skips the tree edge of ``d`` and any ``u`` in
    the subtree of ``d``.
    """
    tree_eid = spt.parent_edge[d]
    for u, eid in g.adj[d]:
        if eid == tree_eid or not spt.in_tree(u):
            continue
        if spt.is_ancestor(d, u):
            continue
        yield u, eid, spt.lca(u, d)


def _splice(spt: SptInfo, u: int, v: int, d: int) -> list[int]:
    """Tree path ``src..u``, hop to ``v``, then tree path ``v..d`` upwards."""
    path = spt.tree_path(u)
    x = v
    while True:
        path.append(x)
        if x == d:
            break
        x = spt.parent[x]
    return path


def _bottom_up(g: Graph, spt: SptInfo):
    """BPL tables merged child to parent; O(n^2 + m)."""
    n = g.n
    bpl: list = [None] * n
    wit: list = [None] * n  # witness edge per BPL entry
    BP = [INF] * n
    best_edge: list = [None] * n
    for d in reversed(spt.order):
        lev = spt.level[d]
        row = [INF] * lev
        wrow: list = [None] * lev
        for s in spt.children[d]:
            ls = g.edges[spt.parent_edge[s]].l
            srow, swit = bpl[s], wit[s]
            for j in range(lev):
                cand = srow[j] + ls
                if cand < row[j]:
                    row[j], wrow[j] = cand, swit[j]
            bpl[s] = wit[s] = None
        for u, eid, a in _crossing_edges(g, spt, d):
            j = spt.level[a]
            cand = spt.SP[u] + g.edges[eid].l
            if cand < row[j]:
                row[j], wrow[j] = cand, (u, d)
        bpl[d], wit[d] = row, wrow
        if lev:
            j = min(range(lev), key=row.__getitem__)
            BP[d], best_edge[d] = row[j], wrow[j]
    return BP, best_edge


def _range_tree(g: Graph, spt: SptInfo):
    """Points ``(DFSnum(v), level(lca))`` in a 2D range tree.

    The weight is ``SP(u) + l(u, v) + SP(v)``: climbing from ``v`` to an
    ancestor ``d`` costs ``SP(v) - SP(d)``, so ``BP(d)`` is the rectangle
    minimum minus ``SP(d)``.
    """
    rt = RangeTree2D(max(len(spt.order), 1))
    BP = [INF] * g.n
    best_edge: list = [None] * g.n
    for d in reversed(spt.order):
        for u, eid, a in _crossing_edges(g, spt, d):
            val = spt.SP[u] + g.edges[eid].l + spt.SP[d]
            rt.insert(spt.DFSnum[d], spt.level[a], val, (u, d))
        lev = spt.level[d]
        if lev:
            w, edge = rt.find_min(spt.DFSnum[d], 0, spt.DFSmax[d], lev - 1)
            if edge is not None:
                BP[d], best_edge[d] = w - spt.SP[d], edge
    return BP, best_edge


def _segtree_lists(g: Graph, spt: SptInfo):
    """Segment tree over DFS numbers with a multiset per leaf and lists keyed by LCA."""
    st = MultisetMinSegTree(max(len(spt.order), 1))
    pending: list[list] = [[] for _ in range(g.n)]  # LT(lca)
    BP = [INF] * g.n
    best_edge: list = [None] * g.n
    for d in reversed(spt.order):
        for leaf, key, payload in pending[d]:
            st.leaf_remove(leaf, key, payload)
        pending[d] = []
        for u, eid, a in _crossing_edges(g, spt, d):
            val = spt.SP[u] + g.edges[eid].l + spt.SP[d]
            leaf = spt.DFSnum[d]
            payload = (u, d)
            st.leaf_insert(leaf, val, payload)
            pending[a].append((leaf, val, payload))
        if spt.level[d]:
            q, leaf = st.query_arg(spt.DFSnum[d], spt.DFSmax[d])
            if q < INF:
                BP[d] = q - spt.SP[d]
                best_edge[d] = st.leaf_min(leaf)[1]
    return BP, best_edge


def _naive(g: Graph, spt: SptInfo):
    """Delete ``(parent(d), d)`` and rerun Dijkstra for every ``d``.

    Distances come from scipy's compiled Dijkstra; parallel edges are
    collapsed to their cheapest copy, and deleting a tree edge exposes the
    next-cheapest parallel copy (or nothing).
    """
    n = g.n
    copies: dict[tuple, list] = {}
    for eid, e in enumerate(g.edges):
        key = (min(e.u, e.v), max(e.u, e.v))
        copies.setdefault(key, []).append((e.l, eid))
    for lst in copies.values():
        lst.sort()
    keys = sorted(copies)
    rows = np.array([k[0] for k in keys], dtype=np.int64)
    cols = np.array([k[1] for k in keys], dtype=np.int64)
    data = np.array([copies[k][0][0] for k in keys], dtype=float)
    mat = csr_matrix((data, (rows, cols)), shape=(n, n))
    # map each pair to its slot in the CSR data array
    slot = {}
    for r in range(n):
        for s in range(mat.indptr[r], mat.indptr[r + 1]):
            slot[(r, int(mat.indices[s]))] = s
    BP = [INF] * n
    paths: list = [None] * n
    for d in spt.order:
        eid = spt.parent_edge[d]
        if eid is None:
            continue
        e = g.edges[eid]
        key = (min(e.u, e.v), max(e.u, e.v))
        s = slot[key]
        rest = [c for c in copies[key] if c[1] != eid]
        mat.data[s] = rest[0][0] if rest else np.inf
        dist, pred = _csgraph_dijkstra(mat, directed=False, indices=spt.src,
                                       return_predecessors=True)
        mat.data[s] = copies[key][0][0]
        if math.isfinite(dist[d]):
            BP[d] = _as_number(dist[d])
            path = [d]
            while path[-1] != spt.src:
                path.append(int(pred[path[-1]]))
            paths[d] = path[::-1]
    return BP, paths


def _as_number(x: float):
    return int(x) if float(x).is_integer() else float(x)


def backup_all(g: Graph, src: int, strategy: str = "bottom_up") -> BackupResult:
    """Backup path length and a witness path for every node reachable from ``src``."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; valid: {', '.join(STRATEGIES)}")
    if not 0 <= src < g.n:
        raise ValueError(f"source {src} outside 0..{g.n - 1}")
    spt = shortest_path_tree(g, src)
    if strategy == "naive":
        BP, paths = _naive(g, spt)
        return BackupResult(BP, paths, spt)
    solver = {"bottom_up": _bottom_up, "range_tree": _range_tree, "segtree_lists": _segtree_lists}[strategy]
    BP, best_edge = solver(g, spt)
    paths: list = [None] * g.n
    for d in range(g.n):
        if best_edge[d] is not None:
            u, v = best_edge[d]
            paths[d] = _splice(spt, u, v, d)
    return BackupResult(BP, paths, spt)


def witness_length(g: Graph, spt: SptInfo, d: int, path: list[int]):
    """Length of ``path`` using the cheapest allowed copy of each hop.

    The tree edge of ``d`` is forbidden; returns ``inf`` when some hop has
    no allowed edge.
    """
    banned = spt.parent_edge[d]
    total = 0
    for a, b in zip(path, path[1:]):
        best = INF
        for y, eid in g.adj[a]:
            if y == b and eid != banned:
                best = min(best, g.edges[eid].l)
        total += best
    return total
