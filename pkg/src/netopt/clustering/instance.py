"""Clustering instances on a line: weights, index bounds, and solution checking.

Points are 1-based throughout; row 0 of every per-point array is padding so
that index ``i`` means point ``i``.  Arrays are shaped ``(n + 1, J, T)``
where ``J`` is ``k`` when weights and bounds vary with the cluster index
and 1 otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

INF = math.inf

AGG = {"sum": sum, "max": max, "min": min}


class PreconditionError(ValueError):
    """A specialised strategy was asked to solve an instance outside its domain."""


def _pad(arr, n, J, T, name):
    a = np.asarray(arr)
    if a.ndim == 1:
        a = a[:, None]
    if a.ndim == 2:
        a = a[:, None, :]
    if a.shape[0] != n:
        raise ValueError(f"{name}: expected {n} rows, got {a.shape[0]}")
    try:
        a = np.broadcast_to(a, (n, J, T))
    except ValueError:
        raise ValueError(f"{name}: shape {a.shape[1:]} does not fit (J={J}, T={T})") from None
    pad = np.zeros((1, J, T), dtype=a.dtype)
    return np.concatenate([pad, a], axis=0)


@dataclass
class ClusterInstance:
    """Consecutive clustering problem.

    ``weights`` is ``n x T`` (or ``n x k x T`` with ``per_cluster=True``).
    Explicit ``l``/``u`` bounds use 1-based point indices; implicit ones
    (``lmin``, ``lmax``, ``wmin``, ``wmax``) are turned into bounds by
    :func:`derive_bounds`.  A cluster ``[p, i]`` of type ``tc`` that is the
    ``j``-th cluster is allowed iff ``l(i, j, tc) <= p <= u(i, j, tc)``;
    ``l = i + 1`` or ``u = 0`` mark a representative that admits nothing.
    """

    weights: object
    F: object = 0
    k: int | None = None
    objf: str = "sum"
    ctype: object = "sum"
    ccost: object = "min"
    per_cluster: bool = False
    x: object = None
    l: object = None
    u: object = None
    lmin: object = None
    lmax: object = None
    wmin: object = None
    wmax: object = None
    bound_method: str = "auto"
    w: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        raw = np.asarray(self.weights)
        if raw.ndim == 1:
            raw = raw[:, None]
        if raw.ndim not in (2, 3) or raw.shape[0] == 0:
            raise ValueError("weights must be a non-empty n x T (or n x k x T) array")
        self.n = raw.shape[0]
        self.T = raw.shape[-1]
        if self.per_cluster:
            if self.k is None:
                raise ValueError("per-cluster weights need k")
            if raw.ndim != 3 or raw.shape[1] != self.k:
                raise ValueError(f"per-cluster weights must be n x k x T with k={self.k}")
            self.J = self.k
        else:
            if raw.ndim == 3:
                raise ValueError("3-D weights need per_cluster=True")
            self.J = 1
        if self.k is not None and not 1 <= self.k <= self.n:
            raise ValueError(f"k must lie in 1..{self.n}, got {self.k}")
        if self.objf not in ("sum", "max"):
            raise ValueError("objf must be 'sum' or 'max'")
        ct = [self.ctype] * self.T if isinstance(self.ctype, str) else list(self.ctype)
        if len(ct) != self.T or any(c not in ("sum", "max") for c in ct):
            raise ValueError("ctype must be 'sum'/'max' or one of them per type")
        self.ctypes = ct
        if isinstance(self.ccost, str) and self.ccost not in AGG:
            raise ValueError("ccost must be min, max, sum or a callable")
        self.w = _pad(raw, self.n, self.J, self.T, "weights")
        if self.x is None:
            self.xs = list(range(self.n + 1))
        else:
            xs = list(np.asarray(self.x).tolist())
            if len(xs) != self.n:
                raise ValueError(f"x: expected {self.n} coordinates")
            if any(b < a for a, b in zip(xs, xs[1:])):
                raise ValueError("coordinates must be non-decreasing")
            self.xs = [xs[0]] + xs
        self.lo, self.hi = derive_bounds(self, method=self.bound_method)

    # -- accessors used by the solvers --------------------------------------

    def jw(self, j: int) -> int:
        """Row of the weight/bound arrays for the ``j``-th cluster (1-based)."""
        return j - 1 if self.J > 1 else 0

    def wcol(self, j: int, tc: int) -> list:
        return self.w[:, self.jw(j), tc].tolist()

    def lcol(self, j: int, tc: int) -> list:
        return self.lo[:, self.jw(j), tc].tolist()

    def ucol(self, j: int, tc: int) -> list:
        return self.hi[:, self.jw(j), tc].tolist()

    def phases(self):
        """Cluster indices whose rows are computed: ``1..k``, or a single pass."""
        return range(1, self.k + 1) if self.k is not None else [1]

    @property
    def base(self):
        """Value of the empty prefix: the identity of ``objf`` (0 for sum, -inf for max)."""
        return 0 if self.objf == "sum" else -INF

    def integral(self) -> bool:
        return np.issubdtype(self.w.dtype, np.integer) and float(self.F).is_integer()

    def ccost_fn(self) -> Callable:
        return AGG[self.ccost] if isinstance(self.ccost, str) else self.ccost


def _first(lo: int, hi: int, pred) -> int:
    """Smallest ``p`` in ``[lo, hi]`` with ``pred(p)`` true (pred monotone); ``hi+1`` if none."""
    while lo <= hi:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid - 1
        else:
            lo = mid + 1
    return lo


def derive_bounds(inst: ClusterInstance, method: str = "auto"):
    """Per ``(i, j, tc)`` bounds ``l`` and ``u`` from explicit or implicit limits.

    ``l(i)`` is the smallest ``p`` whose span ``x(i) - x(p)`` is within
    ``lmax`` and whose weight ``w(p..i)`` is within ``wmax``; ``u(i)`` the
    largest ``p`` whose span reaches ``lmin`` and weight reaches ``wmin``.
    ``method`` is ``sweep`` (valid under the Lipschitz conditions),
    ``bsearch`` (always valid, needs non-negative weights for the weight
    limits) or ``auto``.
    """
    n, J, T = inst.n, inst.J, inst.T
    lo = np.ones((n + 1, J, T), dtype=np.int64)
    hi = np.tile(np.arange(n + 1, dtype=np.int64)[:, None, None], (1, J, T))
    lo[0] = 0
    if inst.l is not None:
        lo = np.maximum(lo, _pad(inst.l, n, J, T, "l").astype(np.int64))
    if inst.u is not None:
        hi = np.minimum(hi, _pad(inst.u, n, J, T, "u").astype(np.int64))
    implicit = {}
    for name in ("lmin", "lmax", "wmin", "wmax"):
        val = getattr(inst, name)
        if val is not None:
            implicit[name] = _pad(val, n, J, T, name)
    if not implicit:
        _check_explicit(lo, hi)
        return lo, hi
    if method not in ("auto", "sweep", "bsearch"):
        raise ValueError("bound method must be auto, sweep or bsearch")
    if ("wmin" in implicit or "wmax" in implicit) and (inst.w < 0).any():
        raise ValueError("weight limits need non-negative weights")
    xs = inst.xs
    for jj in range(J):
        for tc in range(T):
            wcol = inst.w[:, jj, tc].tolist()
            wp = [0] * (n + 1)
            for i in range(1, n + 1):
                wp[i] = wp[i - 1] + wcol[i]
            span = lambda p, i: xs[i] - xs[p]
            wsum = lambda p, i: wp[i] - wp[p - 1]
            for name, measure, kind in (
                ("lmax", span, "l"), ("wmax", wsum, "l"),
                ("lmin", span, "u"), ("wmin", wsum, "u"),
            ):
                if name not in implicit:
                    continue
                lim = implicit[name][:, jj, tc].tolist()
                steps = [measure(i - 1, i) if name[0] == "l" else wcol[i] for i in range(n + 1)]
                use_sweep = method == "sweep" or (
                    method == "auto" and all(lim[i] <= lim[i - 1] + steps[i] for i in range(2, n + 1))
                )
                col = _sweep(n, lim, measure, kind) if use_sweep else _bsearch(n, lim, measure, kind)
                if kind == "l":
                    lo[1:, jj, tc] = np.maximum(lo[1:, jj, tc], col[1:])
                else:
                    hi[1:, jj, tc] = np.minimum(hi[1:, jj, tc], col[1:])
    _check_explicit(lo, hi)
    return lo, hi


def _sweep(n, lim, measure, kind):
    col = [0] * (n + 1)
    if kind == "l":
        p = 1
        for i in range(1, n + 1):
            p = max(p, 1)
            while p <= i and measure(p, i) > lim[i]:
                p += 1
            col[i] = p
    else:
        p = 0
        for i in range(1, n + 1):
            while p + 1 <= i and measure(p + 1, i) >= lim[i]:
                p += 1
            col[i] = p
    return col


def _bsearch(n, lim, measure, kind):
    col = [0] * (n + 1)
    for i in range(1, n + 1):
        if kind == "l":
            col[i] = _first(1, i, lambda p: measure(p, i) <= lim[i])
        else:
            col[i] = _first(1, i, lambda p: measure(p, i) < lim[i]) - 1
    return col


def _check_explicit(lo, hi):
    n = lo.shape[0] - 1
    idx = np.arange(n + 1)[:, None, None]
    if (lo[1:] < 1).any() or (lo[1:] > idx[1:] + 1).any():
        raise ValueError("l bounds must lie in 1..i (i+1 marks an impossible representative)")
    if (hi[1:] < 0).any() or (hi[1:] > idx[1:]).any():
        raise ValueError("u bounds must lie in 0..i (0 marks an impossible representative)")


@dataclass
class ClusterSolution:
    value: object
    clusters: list  # (a, b, tc) with 1-based points; tc is None for a non-selecting ccost
    table: list | None = None
    approx: float | None = None  # set when the value is only an eps-approximation

    @property
    def feasible(self) -> bool:
        return self.value < INF


def cluster_cost(inst: ClusterInstance, j: int, a: int, b: int, tc=None):
    """Cost ``F + ...`` of ``[a, b]`` as the ``j``-th cluster; inf if a bound is violated."""
    jw = inst.jw(j)
    aggs = []
    for t in range(inst.T):
        vals = inst.w[a:b + 1, jw, t].tolist()
        ok = inst.lo[b, jw, t] <= a <= inst.hi[b, jw, t]
        aggs.append(AGG[inst.ctypes[t]](vals) if ok else INF)
    if tc is None:
        return inst.F + inst.ccost_fn()(aggs)
    return inst.F + aggs[tc]


def evaluate(inst: ClusterInstance, clusters) -> object:
    """Objective of an explicit clustering; inf if it is not a valid partition."""
    if not clusters:
        return INF
    if clusters[0][0] != 1 or clusters[-1][1] != inst.n:
        return INF
    if any(c[1] + 1 != d[0] for c, d in zip(clusters, clusters[1:])):
        return INF
    if inst.k is not None and len(clusters) != inst.k:
        return INF
    costs = [cluster_cost(inst, j if inst.k is not None else 1, a, b, tc)
             for j, (a, b, tc) in enumerate(clusters, 1)]
    return sum(costs) if inst.objf == "sum" else max(costs)


def replay(inst: ClusterInstance, rows: list[list], tol=0) -> list:
    """Recover clusters from DP rows by walking the recurrence backwards.

    ``rows[j][i]`` is the best value for points ``1..i`` in ``j`` clusters
    (a single row, used for every ``j``, when ``k`` is absent).  Each step
    scans candidate starts from the right and stops at the first one that
    reproduces the stored value, so the walk touches every point once.
    """
    n = inst.n
    fixed = inst.k is not None
    j = inst.k if fixed else 1
    target = rows[j if fixed else 0][n]
    if target == INF:
        return []
    agg = max if inst.ctypes[0] == "max" else (lambda a, b: a + b)
    out = []
    i = n
    while i > 0:
        cur = rows[j if fixed else 0]
        prev = rows[j - 1] if fixed else rows[0]
        jw = inst.jw(j if fixed else 1)
        want = cur[i]
        acc = [None] * inst.T
        found = None
        stop = j if fixed else 1
        for p in range(i, stop - 1, -1):
            for tc in range(inst.T):
                wv = inst.w[p, jw, tc].item()
                acc[tc] = wv if acc[tc] is None else agg(acc[tc], wv)
            base = prev[p - 1]
            if base == INF:
                continue
            for tc in range(inst.T):
                if not inst.lo[i, jw, tc] <= p <= inst.hi[i, jw, tc]:
                    continue
                c = inst.F + acc[tc]
                cand = base + c if inst.objf == "sum" else max(base, c)
                if cand <= want + tol:
                    found = (p, tc)
                    break
            if found:
                break
        if found is None:
            raise RuntimeError(f"replay failed at point {i}")
        p, tc = found
        out.append((p, i, tc))
        i = p - 1
        j -= 1
    out.reverse()
    return out
