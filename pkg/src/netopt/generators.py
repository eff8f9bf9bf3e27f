"""Seeded random instances shared by the tests, the report and ``--random``."""
from __future__ import annotations

import random

import numpy as np

from .clustering import ClusterInstance
from .graph import Edge, Graph, dijkstra
from .mobile import LineSet


def rng_for(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def connected_graph(rng, n: int, m: int | None = None, max_l: int = 100, min_l: int = 1) -> Graph:
    """Random spanning tree plus extra edges up to ``m`` (no loops, no parallel edges)."""
    rng = rng_for(rng)
    cap = n * (n - 1) // 2
    m = max(n - 1, min(cap, m if m is not None else 2 * n))
    seen = set()
    edges = []
    perm = list(range(n))
    rng.shuffle(perm)
    for i in range(1, n):
        a, b = perm[rng.randrange(i)], perm[i]
        seen.add((min(a, b), max(a, b)))
        edges.append(Edge(a, b, rng.randint(min_l, max_l)))
    dense = m > cap // 2
    pool = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in seen] if dense else None
    if dense:
        rng.shuffle(pool)
    while len(edges) < m:
        if dense:
            a, b = pool.pop()
        else:
            a, b = sorted(rng.sample(range(n), 2))
            if (a, b) in seen:
                continue
        seen.add((a, b))
        edges.append(Edge(a, b, rng.randint(min_l, max_l)))
    return Graph(n, edges)


def retarget_instance(rng, n_max: int = 7, l_max: int = 8):
    """Small graph with lower bounds plus targets; most targets are realisable."""
    rng = rng_for(rng)
    n = rng.randint(2, n_max)
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    for _ in range(rng.randint(0, n)):
        pairs.append(tuple(rng.sample(range(n), 2)))
    edges = []
    for a, b in pairs:
        l = rng.randint(0, l_max)
        lmin = rng.randint(0, l) if rng.random() < 0.4 else 0
        edges.append(Edge(a, b, l, 1, lmin))
    g = Graph(n, edges)
    if rng.random() < 0.3:
        targets = [0] + [rng.randint(0, l_max + 4) for _ in range(n - 1)]
    else:
        targets = dijkstra(g, 0, latencies=[rng.randint(e.lmin, l_max) for e in edges])
    return g, targets


def tree_instance(rng, n_max: int = 10, l_max: int = 6, c_max: int = 15):
    """Random rooted tree (root 0) with lower bounds, and a budget."""
    rng = rng_for(rng)
    n = rng.randint(1, n_max)
    edges = []
    for v in range(1, n):
        l = rng.randint(0, l_max)
        edges.append(Edge(rng.randrange(v), v, l, 1, rng.randint(0, l)))
    return Graph(n, edges), rng.randint(0, c_max)


def labels(rng, n: int, n_labels: int | None = None) -> dict:
    rng = rng_for(rng)
    top = n_labels or max(1, n // 2)
    return {(u, v): rng.randint(1, top) for u in range(n) for v in range(u + 1, n)}


_BOUNDS = {
    "d_table": ("sum", "sum", ("free", "lmin")),
    "e_table_segtree": ("sum", "sum", ("free", "window", "explicit")),
    "deque": ("sum", "sum", ("free", "window", "lmin")),
    "heaps": ("sum", "sum", ("free", "window")),
    "stacks": ("sum", "max", ("free",)),
    "deque_heap": ("sum", "max", ("free", "lmax")),
    "binary_search": ("max", "sum", ("free",)),
    "pointer_deque": ("max", "sum", ("free", "window", "lmin")),
    "range_trees": ("max", "sum", ("free", "window", "explicit")),
    "binary_search_sorted": ("max", "max", ("free",)),
    "pointer_rmq": ("max", "max", ("free", "window", "lmin")),
    "range_trees_rmq": ("max", "max", ("free", "explicit")),
}

SHARED_WEIGHTS = ("d_table", "stacks", "binary_search", "binary_search_sorted")


def cluster_instance(rng, n=None, T=None, k="random", objf=None, ctype=None, bounds="free",
                     per_cluster=None, negative=False, ccost="min", n_max=40, k_max=5, T_max=3, w_max=9):
    """Random clustering instance.

    ``bounds`` picks the constraint shape: ``free`` (none), ``window``
    (length window on sorted coordinates), ``lmin`` / ``lmax`` (one side
    only) or ``explicit`` (arbitrary l/u per point).
    """
    rng = rng_for(rng)
    n = n or rng.randint(1, n_max)
    T = T or rng.randint(1, T_max)
    if k == "random":
        k = rng.choice([None, rng.randint(1, min(n, k_max))])
    objf = objf or rng.choice(["sum", "max"])
    if ctype is None:
        ctype = [rng.choice(["sum", "max"]) for _ in range(T)]
    if per_cluster is None:
        per_cluster = k is not None and rng.random() < 0.3
    per_cluster = per_cluster and k is not None
    shape = (n, k, T) if per_cluster else (n, T)
    low = -5 if negative else 0
    w = np.array([rng.randint(low, w_max) for _ in range(int(np.prod(shape)))]).reshape(shape)
    kw = {}
    x = sorted(rng.randint(0, 3 * n + 5) for _ in range(n))
    if bounds == "window":
        kw.update(x=x, lmax=np.full(n, rng.randint(3, 3 * n + 5)))
        if rng.random() < 0.5:
            kw["lmin"] = np.full(n, rng.randint(0, 3))
    elif bounds == "lmin":
        kw.update(x=x, lmin=np.full(n, rng.randint(0, 4)))
    elif bounds == "lmax":
        kw.update(x=x, lmax=np.full(n, rng.randint(2, 3 * n + 5)))
    elif bounds == "explicit":
        ls = [rng.randint(1, i) for i in range(1, n + 1)]
        kw.update(l=ls, u=[rng.randint(a, i) for a, i in zip(ls, range(1, n + 1))])
    elif bounds != "free":
        raise ValueError(f"unknown bounds shape {bounds!r}")
    return ClusterInstance(w, F=rng.randint(0, 4), k=k, per_cluster=per_cluster, objf=objf,
                           ctype=ctype, ccost=ccost, **kw)


def strategy_instance(rng, strategy: str, **kw) -> ClusterInstance:
    """Random instance meeting the preconditions of ``strategy``."""
    rng = rng_for(rng)
    objf, ctype, shapes = _BOUNDS[strategy]
    per = False if strategy in SHARED_WEIGHTS else None
    return cluster_instance(rng, objf=objf, ctype=ctype, bounds=rng.choice(shapes), per_cluster=per,
                            negative=objf == "sum" and rng.random() < 0.2, **kw)


def strategy_families() -> dict:
    return {s: (o, c) for s, (o, c, _b) in _BOUNDS.items()}


def sum_sum_series(rng, n: int, k: int = 3, T: int = 2) -> ClusterInstance:
    """Unconstrained sum/sum instance for scaling runs."""
    rng = rng_for(rng)
    w = np.array([[rng.randint(0, 100) for _ in range(T)] for _ in range(n)])
    return ClusterInstance(w, F=rng.randint(0, 50), k=k, objf="sum", ctype="sum")


def line_set(rng, n_max: int = 40, span: int = 10, speed: int = 4, K_max: int = 4) -> LineSet:
    """Integer starts and speeds; small ranges make simultaneous events common."""
    rng = rng_for(rng)
    n = rng.randint(1, n_max)
    return LineSet([rng.randint(-span, span) for _ in range(n)],
                   [rng.randint(-speed, speed) for _ in range(n)],
                   rng.randint(1, 4), rng.randint(1, K_max))
