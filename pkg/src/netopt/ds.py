"""Augmented data structures shared by the solvers.

Every structure here has a naive counterpart in ``tests/naive.py`` and is
fuzzed against it.  Infinite sentinels are ``math.inf``/``-math.inf``;
Python's float infinities absorb finite additions, so saturation is free.
"""
from __future__ import annotations

import heapq
import math
import random
from collections import Counter, deque
from typing import Any, Callable, Iterable, Sequence

INF = math.inf


class SegTreeAddMinMax:
    """Lazy segment tree with range add and a min or max aggregate.

    ``argbest`` and ``query_arg`` break ties towards the leftmost leaf.
    """

    def __init__(self, values: Sequence | int, kind: str = "min"):
        if kind not in ("min", "max"):
            raise ValueError("kind must be 'min' or 'max'")
        if isinstance(values, int):
            values = [INF if kind == "min" else -INF] * values
        self.size = len(values)
        if self.size == 0:
            raise ValueError("segment tree needs at least one leaf")
        self.kind = kind
        self._better = (lambda a, b: a < b) if kind == "min" else (lambda a, b: a > b)
        self._neutral = INF if kind == "min" else -INF
        self.val = [self._neutral] * (4 * self.size)
        self.lazy = [0] * (4 * self.size)
        self._build(1, 0, self.size - 1, values)

    def _build(self, node, lo, hi, values):
        if lo == hi:
            self.val[node] = values[lo]
            return
        mid = (lo + hi) // 2
        self._build(2 * node, lo, mid, values)
        self._build(2 * node + 1, mid + 1, hi, values)
        self._pull(node)

    def _pull(self, node):
        a, b = self.val[2 * node], self.val[2 * node + 1]
        self.val[node] = b if self._better(b, a) else a

    def _apply(self, node, delta):
        self.val[node] += delta
        self.lazy[node] += delta

    def _push(self, node):
        if self.lazy[node]:
            self._apply(2 * node, self.lazy[node])
            self._apply(2 * node + 1, self.lazy[node])
            self.lazy[node] = 0

    def _check(self, a, b):
        if not (0 <= a <= b < self.size):
            raise IndexError(f"range [{a},{b}] outside [0,{self.size - 1}]")

    def range_add(self, a: int, b: int, delta) -> None:
        self._check(a, b)
        self._add(1, 0, self.size - 1, a, b, delta)

    def _add(self, node, lo, hi, a, b, delta):
        if b < lo or hi < a:
            return
        if a <= lo and hi <= b:
            self._apply(node, delta)
            return
        self._push(node)
        mid = (lo + hi) // 2
        self._add(2 * node, lo, mid, a, b, delta)
        self._add(2 * node + 1, mid + 1, hi, a, b, delta)
        self._pull(node)

    def set(self, i: int, value) -> None:
        """Overwrite one leaf (used when the old value may be infinite)."""
        self._check(i, i)
        node, lo, hi = 1, 0, self.size - 1
        path = []
        while lo != hi:
            self._push(node)
            path.append(node)
            mid = (lo + hi) // 2
            if i <= mid:
                node, hi = 2 * node, mid
            else:
                node, lo = 2 * node + 1, mid + 1
        self.val[node] = value
        self.lazy[node] = 0
        for p in reversed(path):
            self._pull(p)

    def query(self, a: int, b: int):
        return self.query_arg(a, b)[0]

    def query_arg(self, a: int, b: int) -> tuple[Any, int]:
        """Aggregate over ``[a, b]`` and the leftmost leaf attaining it."""
        self._check(a, b)
        best, arg = self._neutral, -1
        for node, lo, hi in self._cover(a, b):
            if arg < 0 or self._better(self.val[node], best):
                best, arg = self.val[node], self._descend(node, lo, hi)
        return best, arg

    def _cover(self, a, b):
        # canonical nodes of [a, b], left to right, with lazies pushed above them
        out = []
        stack = [(1, 0, self.size - 1)]
        while stack:
            node, lo, hi = stack.pop()
            if b < lo or hi < a:
                continue
            if a <= lo and hi <= b:
                out.append((node, lo, hi))
                continue
            self._push(node)
            mid = (lo + hi) // 2
            stack.append((2 * node + 1, mid + 1, hi))
            stack.append((2 * node, lo, mid))
        return out

    def _descend(self, node, lo, hi):
        target = self.val[node]
        while lo != hi:
            self._push(node)
            mid = (lo + hi) // 2
            if self.val[2 * node] == target:
                node, hi = 2 * node, mid
            else:
                node, lo = 2 * node + 1, mid + 1
        return lo

    def point_query(self, i: int):
        self._check(i, i)
        node, lo, hi = 1, 0, self.size - 1
        while lo != hi:
            self._push(node)
            mid = (lo + hi) // 2
            if i <= mid:
                node, hi = 2 * node, mid
            else:
                node, lo = 2 * node + 1, mid + 1
        return self.val[node]

    def argbest(self) -> int:
        return self._descend(1, 0, self.size - 1)

    def to_list(self) -> list:
        return [self.point_query(i) for i in range(self.size)]


class MultisetMinSegTree(SegTreeAddMinMax):
    """Min segment tree whose leaves each hold a multiset of ``(key, payload)``.

    A leaf's value is the smallest key in its multiset (``inf`` when empty);
    every insertion or removal recomputes that leaf and its ancestors.
    """

    def __init__(self, size: int):
        super().__init__(size, "min")
        self._heaps: list[list] = [[] for _ in range(size)]
        self._dead: list[Counter] = [Counter() for _ in range(size)]
        self._count = [0] * size

    def _refresh(self, i):
        h, dead = self._heaps[i], self._dead[i]
        while h and dead[h[0]]:
            dead[h[0]] -= 1
            heapq.heappop(h)
        self.set(i, h[0][0] if h else INF)

    def leaf_insert(self, i: int, key, payload=None) -> None:
        heapq.heappush(self._heaps[i], (key, payload))
        self._count[i] += 1
        self._refresh(i)

    def leaf_remove(self, i: int, key, payload=None) -> None:
        if self._count[i] == 0:
            raise KeyError(f"leaf {i} is empty")
        self._dead[i][(key, payload)] += 1
        self._count[i] -= 1
        self._refresh(i)

    def leaf_min(self, i: int):
        """Smallest ``(key, payload)`` stored at leaf ``i`` or ``None``."""
        self._refresh(i)
        return self._heaps[i][0] if self._heaps[i] else None


class SegTreeAssign:
    """Range-assign / point-query tree.

    Each canonical node remembers the latest ``(stamp, value)`` written to
    it; a point query takes the freshest stamp on the root-to-leaf path.
    """

    def __init__(self, size: int, initial=None):
        if size <= 0:
            raise ValueError("segment tree needs at least one leaf")
        self.size = size
        self._stamp = [-1] * (4 * size)
        self._value: list = [initial] * (4 * size)
        self._clock = 0

    def assign(self, a: int, b: int, value) -> None:
        if not (0 <= a <= b < self.size):
            raise IndexError(f"range [{a},{b}] outside [0,{self.size - 1}]")
        stack = [(1, 0, self.size - 1)]
        while stack:
            node, lo, hi = stack.pop()
            if b < lo or hi < a:
                continue
            if a <= lo and hi <= b:
                self._stamp[node] = self._clock
                self._value[node] = value
                continue
            mid = (lo + hi) // 2
            stack.append((2 * node, lo, mid))
            stack.append((2 * node + 1, mid + 1, hi))
        self._clock += 1

    def point_query(self, i: int):
        if not 0 <= i < self.size:
            raise IndexError(f"index {i} outside [0,{self.size - 1}]")
        node, lo, hi = 1, 0, self.size - 1
        stamp, value = self._stamp[1], self._value[1]
        while lo != hi:
            mid = (lo + hi) // 2
            if i <= mid:
                node, hi = 2 * node, mid
            else:
                node, lo = 2 * node + 1, mid + 1
            if self._stamp[node] > stamp:
                stamp, value = self._stamp[node], self._value[node]
        return value


class MonotoneDeque:
    """Deque of ``(index, value, *extra)`` tuples kept sorted by value.

    ``kind='min'`` keeps values non-decreasing front to back, so the front
    is the window minimum; ``kind='max'`` mirrors it.  With
    ``pop_equal=True`` a push also discards back entries with an equal value.
    """

    def __init__(self, kind: str = "min", pop_equal: bool = False):
        if kind not in ("min", "max"):
            raise ValueError("kind must be 'min' or 'max'")
        self.kind = kind
        self.pop_equal = pop_equal
        self._q: deque = deque()
        self._last_index = None

    def _dominated(self, old, new) -> bool:
        if self.kind == "min":
            return old > new or (self.pop_equal and old == new)
        return old < new or (self.pop_equal and old == new)

    def push(self, index, value, *extra) -> list:
        """Append an entry; returns the back entries it displaced."""
        if self._last_index is not None and index <= self._last_index:
            raise ValueError(f"index {index} pushed after {self._last_index}; indices must increase")
        self._last_index = index
        popped = []
        q = self._q
        while q and self._dominated(q[-1][1], value):
            popped.append(q.pop())
        q.append((index, value, *extra))
        return popped

    def evict_below(self, min_index) -> list:
        """Drop front entries whose index is below ``min_index``; returns them in order."""
        return self.evict_while(lambda e: e[0] < min_index)

    def evict_while(self, pred: Callable[[tuple], bool]) -> list:
        out = []
        q = self._q
        while q and pred(q[0]):
            out.append(q.popleft())
        return out

    def front(self):
        return self._q[0] if self._q else None

    def back(self):
        return self._q[-1] if self._q else None

    def replace_front(self, entry: tuple) -> None:
        self._q[0] = entry

    def clear(self) -> None:
        self._q.clear()
        self._last_index = None

    def __len__(self) -> int:
        return len(self._q)

    def __iter__(self):
        return iter(self._q)

    def __bool__(self) -> bool:
        return bool(self._q)


class _TreapNode:
    __slots__ = ("key", "w", "payload", "prio", "left", "right",
                 "min_w", "min_p", "max_w", "max_p", "min_y", "max_y")

    def __init__(self, key, w, payload, prio):
        self.key = key
        self.w = w
        self.payload = payload
        self.prio = prio
        self.left = None
        self.right = None
        self.min_w = self.max_w = w
        self.min_p = self.max_p = payload
        self.min_y = self.max_y = key[0]

    def pull(self):
        self.min_w, self.min_p = self.w, self.payload
        self.max_w, self.max_p = self.w, self.payload
        self.min_y = self.max_y = self.key[0]
        for c in (self.left, self.right):
            if c is None:
                continue
            if c.min_w < self.min_w:
                self.min_w, self.min_p = c.min_w, c.min_p
            if c.max_w > self.max_w:
                self.max_w, self.max_p = c.max_w, c.max_p
        if self.left is not None:
            self.min_y = self.left.min_y
        if self.right is not None:
            self.max_y = self.right.max_y


def _split(t, key):
    """Split into (< key, >= key)."""
    if t is None:
        return None, None
    if t.key < key:
        a, b = _split(t.right, key)
        t.right = a
        t.pull()
        return t, b
    a, b = _split(t.left, key)
    t.left = b
    t.pull()
    return a, t


def _merge(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a.prio > b.prio:
        a.right = _merge(a.right, b)
        a.pull()
        return a
    b.left = _merge(a, b.left)
    b.pull()
    return b


def _treap_best(t, y1, y2, want_min):
    if t is None or t.max_y < y1 or t.min_y > y2:
        return None
    if y1 <= t.min_y and t.max_y <= y2:
        return (t.min_w, t.min_p) if want_min else (t.max_w, t.max_p)
    best = None
    if y1 <= t.key[0] <= y2:
        best = (t.w, t.payload)
    for c in (t.left, t.right):
        r = _treap_best(c, y1, y2, want_min)
        if r is not None and (best is None or (r[0] < best[0] if want_min else r[0] > best[0])):
            best = r
    return best


class RangeTree2D:
    """Dynamic 2D range tree over the static x domain ``0..nx-1``.

    The x dimension is a segment tree; every segment node owns a treap keyed
    by ``(y, uid)`` whose nodes aggregate min/max weight and min/max y over
    their subtrees, so a y-interval query costs O(log) per segment node.
    """

    def __init__(self, nx: int, seed: int = 0x5EED):
        if nx <= 0:
            raise ValueError("x domain must be non-empty")
        self.nx = nx
        self._size = 1
        while self._size < nx:
            self._size *= 2
        self._roots: list = [None] * (2 * self._size)
        self._rng = random.Random(seed)
        self._uid = 0
        self._points: dict[tuple, list] = {}

    def __len__(self):
        return sum(len(v) for v in self._points.values())

    def insert(self, x: int, y, weight, payload=None) -> None:
        if not 0 <= x < self.nx:
            raise IndexError(f"x={x} outside [0,{self.nx - 1}]")
        uid = self._uid
        self._uid += 1
        self._points.setdefault((x, y), []).append((uid, weight))
        key = (y, uid)
        prio = self._rng.random()
        node = x + self._size
        while node:
            a, b = _split(self._roots[node], key)
            self._roots[node] = _merge(_merge(a, _TreapNode(key, weight, payload, prio)), b)
            node //= 2

    def delete(self, x: int, y, weight=None) -> None:
        """Remove one point at ``(x, y)`` (matching ``weight`` when given)."""
        entries = self._points.get((x, y))
        pos = None
        if entries:
            for k, (_, w) in enumerate(entries):
                if weight is None or w == weight:
                    pos = k
                    break
        if pos is None:
            raise KeyError(f"no point at ({x}, {y})")
        uid, _ = entries.pop(pos)
        if not entries:
            del self._points[(x, y)]
        key = (y, uid)
        node = x + self._size
        while node:
            a, b = _split(self._roots[node], key)
            _, c = _split(b, (y, uid + 1))
            self._roots[node] = _merge(a, c)
            node //= 2

    def _query(self, x1, y1, x2, y2, want_min):
        best = (INF, None) if want_min else (-INF, None)
        x1 = max(x1, 0)
        x2 = min(x2, self.nx - 1)
        if x1 > x2 or y1 > y2:
            return best
        lo, hi = x1 + self._size, x2 + self._size + 1
        nodes = []
        while lo < hi:
            if lo & 1:
                nodes.append(lo)
                lo += 1
            if hi & 1:
                hi -= 1
                nodes.append(hi)
            lo //= 2
            hi //= 2
        for node in nodes:
            r = _treap_best(self._roots[node], y1, y2, want_min)
            if r is not None and (r[0] < best[0] if want_min else r[0] > best[0]):
                best = r
        return best

    def find_min(self, x1, y1, x2, y2) -> tuple:
        """``(weight, payload)`` of the lightest point in the rectangle, ``(inf, None)`` if empty."""
        return self._query(x1, y1, x2, y2, True)

    def find_max(self, x1, y1, x2, y2) -> tuple:
        return self._query(x1, y1, x2, y2, False)

    def find_min_w(self, x1, y1, x2, y2):
        return self._query(x1, y1, x2, y2, True)[0]

    def find_max_w(self, x1, y1, x2, y2):
        return self._query(x1, y1, x2, y2, False)[0]


class SparseRMQ:
    """Doubling tables answering range min/max in O(1) after O(n log n) build."""

    def __init__(self, arr: Sequence):
        self.n = len(arr)
        self._min = [list(arr)]
        self._max = [list(arr)]
        span = 1
        while 2 * span <= self.n:
            pm, px = self._min[-1], self._max[-1]
            self._min.append([min(pm[i], pm[i + span]) for i in range(self.n - 2 * span + 1)])
            self._max.append([max(px[i], px[i + span]) for i in range(self.n - 2 * span + 1)])
            span *= 2

    def _level(self, a, b):
        if not (0 <= a <= b < self.n):
            raise IndexError(f"range [{a},{b}] outside [0,{self.n - 1}]")
        return (b - a + 1).bit_length() - 1

    def query_min(self, a: int, b: int):
        k = self._level(a, b)
        t = self._min[k]
        return min(t[a], t[b - (1 << k) + 1])

    def query_max(self, a: int, b: int):
        k = self._level(a, b)
        t = self._max[k]
        return max(t[a], t[b - (1 << k) + 1])


def rmq_build(arr: Sequence) -> SparseRMQ:
    return SparseRMQ(arr)


def rmq_max(q: SparseRMQ, a: int, b: int):
    return q.query_max(a, b)


class IndexedHeap:
    """Binary min-heap over hashable items with decrease/increase-key and removal."""

    def __init__(self, items: Iterable[tuple[Any, Any]] = ()):
        self._heap: list[list] = []  # [key, item]
        self._pos: dict = {}
        for item, key in items:
            self.push(item, key)

    def __len__(self):
        return len(self._heap)

    def __contains__(self, item):
        return item in self._pos

    def key(self, item):
        return self._heap[self._pos[item]][0]

    def push(self, item, key) -> None:
        if item in self._pos:
            raise KeyError(f"{item!r} already in heap")
        self._heap.append([key, item])
        self._pos[item] = len(self._heap) - 1
        self._up(len(self._heap) - 1)

    def update(self, item, key) -> None:
        i = self._pos[item]
        old = self._heap[i][0]
        self._heap[i][0] = key
        if key < old:
            self._up(i)
        else:
            self._down(i)

    def push_or_update(self, item, key) -> None:
        if item in self._pos:
            self.update(item, key)
        else:
            self.push(item, key)

    def remove(self, item) -> None:
        i = self._pos.pop(item)
        last = self._heap.pop()
        if i < len(self._heap):
            self._heap[i] = last
            self._pos[last[1]] = i
            self._up(i)
            self._down(self._pos[last[1]])

    def peek(self) -> tuple:
        """``(key, item)`` of the minimum, or ``(inf, None)`` when empty."""
        if not self._heap:
            return INF, None
        k, item = self._heap[0]
        return k, item

    def pop(self) -> tuple:
        if not self._heap:
            raise IndexError("pop from empty heap")
        k, item = self._heap[0]
        self.remove(item)
        return k, item

    def _swap(self, i, j):
        h = self._heap
        h[i], h[j] = h[j], h[i]
        self._pos[h[i][1]] = i
        self._pos[h[j][1]] = j

    def _up(self, i):
        h = self._heap
        while i > 0:
            p = (i - 1) // 2
            if h[i][0] < h[p][0]:
                self._swap(i, p)
                i = p
            else:
                break

    def _down(self, i):
        h = self._heap
        n = len(h)
        while True:
            c = 2 * i + 1
            if c >= n:
                break
            if c + 1 < n and h[c + 1][0] < h[c][0]:
                c += 1
            if h[c][0] < h[i][0]:
                self._swap(i, c)
                i = c
            else:
                break
