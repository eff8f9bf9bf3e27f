"""Shared plumbing for the specialised clustering strategies."""
from __future__ import annotations

import math

import numpy as np

from .instance import ClusterInstance, ClusterSolution, PreconditionError, replay

INF = math.inf


def prefix(col: list) -> list:
    out = [0] * len(col)
    for i in range(1, len(col)):
        out[i] = out[i - 1] + col[i]
    return out


def check_family(inst: ClusterInstance, objf: str, ctype: str, strategy: str, valid) -> None:
    if strategy not in valid:
        raise ValueError(f"unknown strategy {strategy!r}; valid: {', '.join(valid)}")
    if inst.objf != objf or any(c != ctype for c in inst.ctypes) or inst.ccost != "min":
        raise PreconditionError(
            f"{strategy} needs objf={objf}, ctype={ctype} for every type and ccost=min"
        )
    if objf == "max" and (inst.w < 0).any():
        raise PreconditionError(f"{strategy} needs non-negative weights")


def unit_lower(inst: ClusterInstance, strategy: str) -> None:
    if (inst.lo[1:] != 1).any():
        raise PreconditionError(f"{strategy} needs l(i, j, tc) = 1 everywhere")


def full_upper(inst: ClusterInstance, strategy: str) -> None:
    idx = np.arange(inst.n + 1)[:, None, None]
    if (inst.hi[1:] != idx[1:]).any():
        raise PreconditionError(f"{strategy} needs u(i, j, tc) = i everywhere")


def nondecreasing(inst: ClusterInstance, strategy: str, which: str) -> None:
    arr = inst.lo if which == "l" else inst.hi
    if (np.diff(arr[1:], axis=0) < 0).any():
        raise PreconditionError(
            f"{strategy} needs non-decreasing {which}: {which}(i, j, tc) <= {which}(i+1, j, tc)"
        )


def same_across_clusters(inst: ClusterInstance, strategy: str) -> None:
    if inst.J > 1 and (inst.w != inst.w[:, :1, :]).any():
        raise PreconditionError(f"{strategy} needs weights equal across cluster indices")


def tolerance(inst: ClusterInstance) -> float:
    if inst.integral():
        return 0
    scale = inst.n * abs(float(inst.F)) + float(np.abs(inst.w).sum()) + 1.0
    return 1e-9 * scale


def run_phases(inst: ClusterInstance, solver) -> ClusterSolution:
    """Drive ``solver(inst, j, prev, cur)`` over the cluster indices, then rebuild clusters.

    With ``k`` absent the solver runs once with ``prev`` and ``cur`` being
    the same row, filled left to right.
    """
    n = inst.n
    if inst.k is not None:
        rows = [[inst.base] + [INF] * n]
        for j in range(1, inst.k + 1):
            cur = [INF] * (n + 1)
            solver(inst, j, rows[-1], cur)
            rows.append(cur)
    else:
        cur = [inst.base] + [INF] * n
        solver(inst, 1, cur, cur)
        rows = [cur]
    value = rows[-1][n]
    clusters = replay(inst, rows, tolerance(inst)) if value < INF else []
    return ClusterSolution(value, clusters, rows)
