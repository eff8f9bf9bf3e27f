"""Earliest time at which points moving on a line fit into K intervals of length L.

Positions are exact rationals: point ``i`` sits at ``x(i) + w(i) * t``.
The fewest intervals needed can only change when two points meet or reach
distance exactly ``L``, so it suffices to test those event times.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(str(v)) if isinstance(v, float) else Fraction(v)


class LineSet:
    """Moving points with an interval length ``L > 0`` and budget ``K >= 1``."""

    def __init__(self, x, w, L, K: int):
        if len(x) != len(w):
            raise ValueError("x and w must have the same length")
        if not x:
            raise ValueError("need at least one point")
        self.x = [_q(v) for v in x]
        self.w = [_q(v) for v in w]
        self.L = _q(L)
        if self.L <= 0:
            raise ValueError("interval length L must be positive")
        if int(K) != K or K < 1:
            raise ValueError("interval budget K must be a positive integer")
        self.K = int(K)
        self.n = len(self.x)

    @classmethod
    def from_moves(cls, x, d, v, L, K) -> "LineSet":
        """Build from start position, direction (-1 or +1) and speed."""
        if any(s not in (-1, 1) for s in d):
            raise ValueError("directions must be -1 or +1")
        if any(_q(s) < 0 for s in v):
            raise ValueError("speeds must be non-negative")
        return cls(x, [di * _q(vi) for di, vi in zip(d, v)], L, K)

    def y(self, i: int, t) -> Fraction:
        return self.x[i] + self.w[i] * t


def parse_points(text: str):
    """``x d v`` per line; returns the three columns as rationals/ints."""
    xs, ds, vs = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 3:
            raise ValueError(f"line {lineno}: expected 'x d v'")
        try:
            xs.append(Fraction(tok[0]))
            ds.append(int(tok[1]))
            vs.append(Fraction(tok[2]))
        except ValueError:
            raise ValueError(f"line {lineno}: bad number") from None
    return xs, ds, vs


def sorted_order(ls: LineSet, t) -> list[int]:
    """Point ids by position at ``t``; ties by speed then id (the order just after ``t``)."""
    return sorted(range(ls.n), key=lambda i: (ls.y(i, t), ls.w[i], i))


def _exceeds(ls: LineSet, a: int, b: int, t, after: bool) -> bool:
    """Is point ``b`` (right of ``a``) out of reach of an interval starting at ``a``?"""
    dy = ls.y(b, t) - ls.y(a, t)
    return dy > ls.L or (after and dy == ls.L and ls.w[b] > ls.w[a])


def _cover_tables(ls, order, t, p, q, m, nxt, last, after=False):
    """Two-pointer pass filling ``m``, ``nxt``, ``last`` for positions ``p..q``."""
    right = q
    for i in range(q, p - 1, -1):
        a = order[i]
        while _exceeds(ls, a, order[right], t, after):
            right -= 1
        nxt[i] = right + 1
        if right == q:
            m[i], last[i] = 1, i
        else:
            m[i], last[i] = 1 + m[right + 1], last[right + 1]


def min_intervals_at(ls: LineSet, t, p: int = 0, q: int | None = None, order=None):
    """``(m, next, last)`` for positions ``p..q`` (0-based, inclusive) at time ``t``.

    ``m[i]`` is the fewest intervals covering positions ``i..q``, ``next[i]``
    where the second one starts (``q + 1`` if none) and ``last[i]`` where
    the final one starts.  Lists are indexed by absolute position.
    """
    q = ls.n - 1 if q is None else q
    if p > q:
        raise ValueError(f"empty range: p={p} > q={q}")
    order = sorted_order(ls, t) if order is None else order
    m, nxt, last = [0] * ls.n, [0] * ls.n, [0] * ls.n
    _cover_tables(ls, order, _q(t), p, q, m, nxt, last)
    return m, nxt, last


class Event(NamedTuple):
    time: Fraction
    kind: str  # "start", "cross" or "close"
    i: int
    j: int


_KIND_RANK = {"start": 0, "cross": 1, "close": 2}


def event_set(ls: LineSet) -> list[Event]:
    """Time 0 plus every ``t >= 0`` at which a pair meets or is exactly ``L`` apart.

    Pairs moving in parallel never change their distance and contribute
    nothing.  Sorted by time, then kind, then pair.
    """
    out = [Event(Fraction(0), "start", -1, -1)]
    L = ls.L
    for i in range(ls.n):
        for j in range(i + 1, ls.n):
            dw = ls.w[j] - ls.w[i]
            if dw == 0:
                continue
            dx = ls.x[j] - ls.x[i]
            t = -dx / dw
            if t >= 0:
                out.append(Event(t, "cross", i, j))
            for s in (L, -L):
                t = (s - dx) / dw
                if t >= 0:
                    out.append(Event(t, "close", i, j))
    out.sort(key=lambda e: (e.time, _KIND_RANK[e.kind], e.i, e.j))
    return out


def _batches(events):
    cur, items = None, []
    for e in events:
        if cur is not None and e.time != cur:
            yield cur, items
            items = []
        cur = e.time
        items.append(e)
    if items:
        yield cur, items


def _rescan(ls: LineSet, trace=None):
    order = list(range(ls.n))
    for t, _batch in _batches(event_set(ls)):
        key = lambda i: (ls.y(i, t), ls.w[i], i)
        for s in range(1, ls.n):  # insertion sort: only crossing neighbours move
            c = order[s]
            k = s
            while k > 0 and key(order[k - 1]) > key(c):
                order[k] = order[k - 1]
                k -= 1
            order[k] = c
        m = min_intervals_at(ls, t, 0, ls.n - 1, order)[0][0]
        if trace is not None:
            trace.append((t, m))
        if m <= ls.K:
            return t
    return None


class KineticCover:
    """Order, global ``next`` and per-group local tables, advanced event by event.

    Between events every table describes the configuration just after the
    last processed time; during a batch, tables touched by pairs reaching
    distance ``L`` from above are first brought to the exact event time.
    """

    def __init__(self, ls: LineSet, group: int | None = None):
        self.ls = ls
        n = ls.n
        self.g = group or math.isqrt(n - 1) + 1
        self.t = Fraction(0)
        self.order = sorted_order(ls, 0)
        self.pos = [0] * n
        for k, i in enumerate(self.order):
            self.pos[i] = k
        self.m_loc = [0] * n
        self.next_loc = [0] * n
        self.last_loc = [0] * n
        self.next = [0] * n
        _cover_tables(ls, self.order, self.t, 0, n - 1, [0] * n, self.next, [0] * n)
        for G in range(self.groups()):
            self._rebuild(G, after=False)

    def groups(self) -> int:
        return (self.ls.n + self.g - 1) // self.g

    def _span(self, G: int):
        return G * self.g, min(self.ls.n, (G + 1) * self.g) - 1

    def _rebuild(self, G: int, after: bool) -> None:
        p, q = self._span(G)
        _cover_tables(self.ls, self.order, self.t, p, q, self.m_loc, self.next_loc, self.last_loc, after)

    def _refresh_next(self, a: int, after: bool) -> None:
        """First position right of ``a`` out of reach, by binary search on the sorted order."""
        ls, order, t = self.ls, self.order, self.t
        lo, hi = a + 1, ls.n
        while lo < hi:
            mid = (lo + hi) // 2
            if _exceeds(ls, order[a], order[mid], t, after):
                hi = mid
            else:
                lo = mid + 1
        self.next[a] = lo

    def count(self) -> int:
        """Fewest intervals for all points, hopping one group at a time."""
        g, n = self.g, self.ls.n
        last_group = (n - 1) // g
        m = self.m_loc[0]
        po = self.last_loc[0]
        while po // g != last_group:
            po = self.next[po]
            if po >= n:
                break
            m += self.m_loc[po]
            po = self.last_loc[po]
        return m

    def _close_pairs(self, batch):
        """Split close events into (arriving, departing) position pairs ``(a, b)``, ``a < b``."""
        arrive, depart = [], []
        for e in batch:
            if e.kind != "close":
                continue
            a, b = self.pos[e.i], self.pos[e.j]
            if a > b:
                a, b = b, a
            dw = self.ls.w[self.order[b]] - self.ls.w[self.order[a]]
            (arrive if dw < 0 else depart).append((a, b))
        return sorted(arrive), sorted(depart, reverse=True)

    def _reorder(self, batch) -> list[int]:
        """Re-sort every run of coinciding points; returns the positions touched."""
        ls, order, t = self.ls, self.order, self.t
        touched = set()
        for e in batch:
            if e.kind != "cross":
                continue
            lo, hi = sorted((self.pos[e.i], self.pos[e.j]))
            here = ls.y(e.i, t)
            while lo > 0 and ls.y(order[lo - 1], t) == here:
                lo -= 1
            while hi + 1 < ls.n and ls.y(order[hi + 1], t) == here:
                hi += 1
            run = sorted(order[lo:hi + 1], key=lambda i: (ls.w[i], i))
            order[lo:hi + 1] = run
            for k in range(lo, hi + 1):
                self.pos[order[k]] = k
                touched.add(k)
        return sorted(touched)

    def _apply(self, pairs, runs, after: bool) -> None:
        # A run position may now hold a point whose partner sits at a fixed
        # distance of exactly L; no event names that pair, so refresh it here.
        dirty = {a // self.g for a in runs}
        for a in runs:
            self._refresh_next(a, after)
        for a, b in pairs:
            self._refresh_next(a, after)
            if a // self.g == b // self.g:
                dirty.add(a // self.g)
        for G in sorted(dirty):
            self._rebuild(G, after)

    def step(self, t, batch) -> int:
        """Advance to event time ``t``; returns the interval count at ``t``."""
        self.t = t
        runs = self._reorder(batch)
        arrive, depart = self._close_pairs(batch)
        self._apply(arrive, runs, after=False)
        m = self.count()
        self._apply(depart, runs, after=True)
        return m

    def check(self, after: bool = True) -> list[str]:
        """Compare every maintained table with a from-scratch recomputation."""
        ls, n = self.ls, self.ls.n
        issues = []
        if self.order != sorted_order(ls, self.t):
            issues.append("order")
        nxt = [0] * n
        _cover_tables(ls, self.order, self.t, 0, n - 1, [0] * n, nxt, [0] * n, after)
        if nxt != self.next:
            issues.append("next")
        m, nl, la = [0] * n, [0] * n, [0] * n
        for G in range(self.groups()):
            p, q = self._span(G)
            _cover_tables(ls, self.order, self.t, p, q, m, nl, la, after)
        if (m, nl, la) != (self.m_loc, self.next_loc, self.last_loc):
            issues.append("local")
        return issues


def _kinetic(ls: LineSet, trace=None, group=None):
    kc = KineticCover(ls, group)
    for t, batch in _batches(event_set(ls)):
        m = kc.step(t, batch)
        if trace is not None:
            trace.append((t, m))
        if m <= ls.K:
            return t
    return None


def earliest_cover_time(ls: LineSet, strategy: str = "kinetic", trace=None):
    """Earliest event time with at most ``K`` intervals, or None.

    ``trace``, if a list, receives ``(time, count)`` for every event tested.
    """
    if strategy == "rescan":
        return _rescan(ls, trace)
    if strategy == "kinetic":
        return _kinetic(ls, trace)
    raise ValueError(f"unknown strategy {strategy!r}; valid: rescan, kinetic")
