"""Naive references for the data structures and seeded fuzz drivers.

Each ``fuzz_*`` runs ``ops`` random operations against the structure and a
plain list/scan model and returns the number of mismatching answers.
"""
from __future__ import annotations

import math
import random

from netopt.ds import (
    IndexedHeap,
    MonotoneDeque,
    MultisetMinSegTree,
    RangeTree2D,
    SegTreeAddMinMax,
    SegTreeAssign,
    SparseRMQ,
)
from netopt.graph import SparseTableLCA

INF = math.inf


def _range(rng, n):
    a = rng.randrange(n)
    b = rng.randrange(n)
    return min(a, b), max(a, b)


def fuzz_segtree(seed: int, ops: int = 10_000, kind: str = "min") -> int:
    rng = random.Random(seed)
    n = rng.randint(1, 64)
    arr = [rng.randint(-50, 50) for _ in range(n)]
    st = SegTreeAddMinMax(list(arr), kind)
    pick = min if kind == "min" else max
    bad = 0
    for _ in range(ops):
        op = rng.random()
        if op < 0.35:
            a, b = _range(rng, n)
            d = rng.randint(-20, 20)
            st.range_add(a, b, d)
            for i in range(a, b + 1):
                arr[i] += d
        elif op < 0.45:
            i = rng.randrange(n)
            arr[i] = rng.randint(-50, 50)
            st.set(i, arr[i])
        elif op < 0.75:
            a, b = _range(rng, n)
            best = pick(arr[a:b + 1])
            got, arg = st.query_arg(a, b)
            bad += got != best or arg != arr.index(best, a, b + 1)
        elif op < 0.9:
            i = rng.randrange(n)
            bad += st.point_query(i) != arr[i]
        else:
            bad += st.argbest() != arr.index(pick(arr))
    return bad


def fuzz_multiset(seed: int, ops: int = 10_000) -> int:
    rng = random.Random(seed)
    n = rng.randint(1, 32)
    st = MultisetMinSegTree(n)
    bags: list[list] = [[] for _ in range(n)]
    bad = 0
    for _ in range(ops):
        op = rng.random()
        i = rng.randrange(n)
        if op < 0.4:
            item = (rng.randint(0, 30), rng.randint(0, 3))
            bags[i].append(item)
            st.leaf_insert(i, *item)
        elif op < 0.65 and bags[i]:
            item = bags[i].pop(rng.randrange(len(bags[i])))
            st.leaf_remove(i, *item)
        elif op < 0.85:
            a, b = _range(rng, n)
            want = min((min(bag)[0] for bag in bags[a:b + 1] if bag), default=INF)
            bad += st.query(a, b) != want
        else:
            bad += st.leaf_min(i) != (min(bags[i]) if bags[i] else None)
    return bad


def fuzz_assign(seed: int, ops: int = 10_000) -> int:
    rng = random.Random(seed)
    n = rng.randint(1, 64)
    st = SegTreeAssign(n, initial=-1)
    arr = [-1] * n
    bad = 0
    for _ in range(ops):
        if rng.random() < 0.5:
            a, b = _range(rng, n)
            v = rng.randint(0, 99)
            st.assign(a, b, v)
            arr[a:b + 1] = [v] * (b - a + 1)
        else:
            i = rng.randrange(n)
            bad += st.point_query(i) != arr[i]
    return bad


def fuzz_deque(seed: int, ops: int = 10_000) -> int:
    """Sliding-window extremes with a randomly moving left edge."""
    rng = random.Random(seed)
    bad = 0
    for kind in ("min", "max"):
        pick = min if kind == "min" else max
        dq = MonotoneDeque(kind, pop_equal=rng.random() < 0.5)
        vals: list = []
        left = 0
        for _ in range(ops // 2):
            if rng.random() < 0.6 or left == len(vals):
                vals.append(rng.randint(0, 20))
                dq.push(len(vals) - 1, vals[-1])
            else:
                left += rng.randint(1, max(1, (len(vals) - left) // 2))
                left = min(left, len(vals))
                dq.evict_below(left)
            window = vals[left:]
            f = dq.front()
            if not window:
                bad += f is not None
                continue
            bad += f is None or f[1] != pick(window)
            entries = list(dq)
            idx = [e[0] for e in entries]
            v = [e[1] for e in entries]
            bad += idx != sorted(set(idx))
            bad += v != (sorted(v) if kind == "min" else sorted(v, reverse=True))
    return bad


def fuzz_range_tree(seed: int, ops: int = 10_000) -> int:
    rng = random.Random(seed)
    nx = rng.randint(1, 40)
    rt = RangeTree2D(nx, seed=seed)
    pts: list = []
    bad = 0
    for _ in range(ops):
        op = rng.random()
        if op < 0.4:
            p = (rng.randrange(nx), rng.randint(-10, 10), rng.randint(-100, 100))
            pts.append(p)
            rt.insert(*p)
        elif op < 0.6 and pts:
            x, y, w = pts.pop(rng.randrange(len(pts)))
            rt.delete(x, y, w)
        else:
            x1, x2 = _range(rng, nx)
            y1, y2 = sorted((rng.randint(-12, 12), rng.randint(-12, 12)))
            inside = [w for x, y, w in pts if x1 <= x <= x2 and y1 <= y <= y2]
            bad += rt.find_min_w(x1, y1, x2, y2) != min(inside, default=INF)
            bad += rt.find_max_w(x1, y1, x2, y2) != max(inside, default=-INF)
    return bad


def fuzz_rmq(seed: int, ops: int = 10_000) -> int:
    rng = random.Random(seed)
    bad = 0
    done = 0
    while done < ops:
        arr = [rng.randint(-99, 99) for _ in range(rng.randint(1, 200))]
        q = SparseRMQ(arr)
        for _ in range(min(500, ops - done)):
            a, b = _range(rng, len(arr))
            bad += q.query_min(a, b) != min(arr[a:b + 1])
            bad += q.query_max(a, b) != max(arr[a:b + 1])
            done += 1
    return bad


def fuzz_heap(seed: int, ops: int = 10_000) -> int:
    rng = random.Random(seed)
    h = IndexedHeap()
    model: dict = {}
    bad = 0
    for _ in range(ops):
        op = rng.random()
        item = rng.randrange(200)
        if op < 0.35:
            key = (rng.randint(0, 50), item)
            h.push_or_update(item, key)
            model[item] = key
        elif op < 0.5 and model:
            item = rng.choice(list(model))
            h.remove(item)
            del model[item]
        elif op < 0.65 and model:
            k, it = h.pop()
            want = min(model.values())
            bad += k != want
            del model[it]
        else:
            k, _it = h.peek()
            bad += k != min(model.values(), default=INF)
        bad += len(h) != len(model)
    return bad


def _naive_lca(parent, depth, u, v):
    while depth[u] > depth[v]:
        u = parent[u]
    while depth[v] > depth[u]:
        v = parent[v]
    while u != v:
        u, v = parent[u], parent[v]
    return u


def fuzz_lca(seed: int, ops: int = 10_000) -> int:
    rng = random.Random(seed)
    bad = 0
    done = 0
    while done < ops:
        n = rng.randint(1, 120)
        parent = [-1] + [rng.randrange(v) for v in range(1, n)]
        depth = [0] * n
        children: list[list] = [[] for _ in range(n)]
        for v in range(1, n):
            depth[v] = depth[parent[v]] + 1
            children[parent[v]].append(v)
        lca = SparseTableLCA(children, 0, depth)
        for _ in range(min(500, ops - done)):
            u, v = rng.randrange(n), rng.randrange(n)
            bad += lca.query(u, v) != _naive_lca(parent, depth, u, v)
            done += 1
    return bad


FUZZERS = {
    "SegTreeAddMinMax/min": lambda s, o: fuzz_segtree(s, o, "min"),
    "SegTreeAddMinMax/max": lambda s, o: fuzz_segtree(s, o, "max"),
    "MultisetMinSegTree": fuzz_multiset,
    "SegTreeAssign": fuzz_assign,
    "MonotoneDeque": fuzz_deque,
    "RangeTree2D": fuzz_range_tree,
    "SparseRMQ": fuzz_rmq,
    "IndexedHeap": fuzz_heap,
    "SparseTableLCA": fuzz_lca,
}
