"""Text format for clustering instances and solutions.

::

    n T [k] F objf ctype          # ctype may list one value per type: sum,max
    weights [per_cluster]         # n rows of T values (k*T with per_cluster)
    ...
    x                             # optional: n coordinates, any layout
    l | u | lmin | lmax | wmin | wmax   # optional: n rows, same width as weights
    ccost min|max|sum             # optional, default min

Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

import math

import numpy as np

from .instance import ClusterInstance, ClusterSolution

BOUND_SECTIONS = ("l", "u", "lmin", "lmax", "wmin", "wmax")


class InstanceFormatError(ValueError):
    pass


def _num(tok: str, lineno: int):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        v = float(tok)
    except ValueError:
        raise InstanceFormatError(f"line {lineno}: bad number {tok!r}") from None
    if math.isnan(v):
        raise InstanceFormatError(f"line {lineno}: NaN is not allowed")
    return v


def parse_instance(text: str) -> ClusterInstance:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise InstanceFormatError("line 1: empty instance file")
    lineno, head = rows[0]
    if len(head) not in (5, 6):
        raise InstanceFormatError(f"line {lineno}: expected 'n T [k] F objf ctype'")
    try:
        n, T = int(head[0]), int(head[1])
        k = int(head[2]) if len(head) == 6 else None
    except ValueError:
        raise InstanceFormatError(f"line {lineno}: n, T and k must be integers") from None
    if n < 1 or T < 1:
        raise InstanceFormatError(f"line {lineno}: n and T must be positive")
    F = _num(head[-3], lineno)
    objf = head[-2]
    ctype = head[-1].split(",")
    ctype = ctype[0] if len(ctype) == 1 else ctype

    kw: dict = {}
    ccost = "min"
    per_cluster = False
    weights = None
    i = 1
    while i < len(rows):
        lineno, tok = rows[i]
        name = tok[0]
        if name == "ccost":
            if len(tok) != 2:
                raise InstanceFormatError(f"line {lineno}: expected 'ccost min|max|sum'")
            ccost = tok[1]
            i += 1
            continue
        if name == "x":
            vals = []
            i += 1
            while len(vals) < n and i < len(rows):
                vals += [_num(t, rows[i][0]) for t in rows[i][1]]
                i += 1
            if len(vals) != n:
                raise InstanceFormatError(f"line {lineno}: section x needs {n} values, got {len(vals)}")
            kw["x"] = vals
            continue
        if name != "weights" and name not in BOUND_SECTIONS:
            raise InstanceFormatError(f"line {lineno}: unknown section {name!r}")
        if name == "weights":
            if tok[1:] not in ([], ["per_cluster"]):
                raise InstanceFormatError(f"line {lineno}: expected 'weights [per_cluster]'")
            per_cluster = bool(tok[1:])
            if per_cluster and k is None:
                raise InstanceFormatError(f"line {lineno}: per_cluster weights need k in the header")
        width = T * (k if per_cluster else 1)
        if i + n >= len(rows):
            raise InstanceFormatError(f"line {lineno}: section {name} needs {n} rows")
        block = []
        for r in range(i + 1, i + 1 + n):
            ln, vals = rows[r]
            # bounds may omit the cluster index even when weights carry it
            if len(vals) != width and not (name != "weights" and len(vals) == T):
                raise InstanceFormatError(f"line {ln}: expected {width} values, got {len(vals)}")
            block.append([_num(t, ln) for t in vals])
        arr = np.array(block)
        if arr.shape[1] != T:
            arr = arr.reshape(n, k, T)
        if name == "weights":
            weights = arr
        else:
            kw[name] = arr
        i += n + 1
    if weights is None:
        raise InstanceFormatError("missing weights section")
    try:
        return ClusterInstance(weights, F=F, k=k, objf=objf, ctype=ctype, ccost=ccost,
                               per_cluster=per_cluster, **kw)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None


def format_instance(inst: ClusterInstance) -> str:
    """Weights, coordinates and derived bounds (as explicit ``l``/``u``)."""
    ct = ",".join(inst.ctypes) if len(set(inst.ctypes)) > 1 else inst.ctypes[0]
    k = f" {inst.k}" if inst.k is not None else ""
    out = [f"{inst.n} {inst.T}{k} {_fmt(inst.F)} {inst.objf} {ct}"]
    if isinstance(inst.ccost, str) and inst.ccost != "min":
        out.append(f"ccost {inst.ccost}")

    def block(arr):
        a = arr[1:]
        if inst.J == 1:
            a = a[:, 0, :]
        return [" ".join(_fmt(v) for v in row.ravel().tolist()) for row in a]

    out.append("weights per_cluster" if inst.J > 1 else "weights")
    out += block(inst.w)
    out.append("x")
    out.append(" ".join(_fmt(v) for v in inst.xs[1:]))
    out.append("l")
    out += block(inst.lo)
    out.append("u")
    out += block(inst.hi)
    return "\n".join(out) + "\n"


def _fmt(v) -> str:
    if isinstance(v, float) and v.is_integer() and abs(v) < 2 ** 53:
        return str(int(v))
    return repr(v) if isinstance(v, float) else str(v)


def format_solution(sol: ClusterSolution) -> str:
    """Objective value, then ``a b tc`` per cluster (``-`` when no type applies)."""
    if not sol.feasible:
        return "infeasible\n"
    lines = [_fmt(sol.value)]
    for a, b, tc in sol.clusters:
        lines.append(f"{a} {b} {'-' if tc is None else tc}")
    return "\n".join(lines) + "\n"
