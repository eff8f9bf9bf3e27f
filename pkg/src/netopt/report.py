"""Timing series, fitted exponents and design-gap counts, written as CSV and PNG."""
from __future__ import annotations

import csv
import gc
import os
import random
import time
from collections import Counter

import numpy as np

from . import generators as gen
from .backup import backup_all
from .clustering import solve
from .design import LabeledComplete, diameter3_design
from .mobile import earliest_cover_time
from .oracles import design3_optimum

SERIES = (1000, 2000, 4000, 8000)
QUICK_SERIES = (250, 500, 1000, 2000)


def _clock(fn, reps: int) -> float:
    """Best wall time over ``reps`` calls, with the cyclic collector paused as timeit does."""
    best = float("inf")
    enabled = gc.isenabled()
    try:
        for _ in range(reps):
            gc.collect()
            gc.disable()
            t = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t)
            gc.enable()
    finally:
        if enabled:
            gc.enable()
        else:
            gc.disable()
    return best


def time_backup(strategy: str, n: int, seed: int = 0, density: int = 4, reps: int = 1) -> float:
    g = gen.connected_graph(random.Random(seed * 1_000_003 + n), n, density * n)
    return _clock(lambda: backup_all(g, 0, strategy), reps)


def time_cluster(strategy: str, n: int, seed: int = 0, k: int = 3, T: int = 2, reps: int = 1) -> float:
    inst = gen.sum_sum_series(random.Random(seed * 1_000_003 + n), n, k, T)
    return _clock(lambda: solve(inst, strategy), reps)


def time_cover(strategy: str, n: int, seed: int = 0, reps: int = 1) -> float:
    rng = random.Random(seed * 1_000_003 + n)
    ls = gen.LineSet([rng.randint(-4 * n, 4 * n) for _ in range(n)],
                     [rng.randint(-20, 20) for _ in range(n)], 4, 1)
    return _clock(lambda: earliest_cover_time(ls, strategy), reps)


def fit_exponent(ns, seconds) -> float:
    """Slope of the least-squares line through ``(log n, log t)``."""
    return float(np.polyfit(np.log(np.asarray(ns, float)), np.log(np.asarray(seconds, float)), 1)[0])


def scaling(experiments, ns, seed: int = 0, reps: int = 1) -> list[dict]:
    """Run ``experiments`` (``(name, strategy, timer)`` triples) over ``ns``."""
    rows = []
    for name, strategy, timer in experiments:
        for n in ns:
            rows.append({"experiment": name, "strategy": strategy, "n": n,
                         "seconds": timer(strategy, n, seed=seed, reps=reps)})
    return rows


def exponents(rows) -> list[dict]:
    groups: dict = {}
    for r in rows:
        groups.setdefault((r["experiment"], r["strategy"]), []).append((r["n"], r["seconds"]))
    out = []
    for (name, strategy), pts in groups.items():
        ns, ts = zip(*sorted(pts))
        out.append({"experiment": name, "strategy": strategy, "exponent": round(fit_exponent(ns, ts), 4)})
    return out


def design_gaps(samples: int = 200, seed: int = 0, n_max: int = 10) -> Counter:
    """Greedy label count minus the exhaustive optimum, over random labelings."""
    rng = random.Random(seed)
    gaps: Counter = Counter()
    for _ in range(samples):
        n = rng.randint(3, n_max)
        lab = gen.labels(rng, n, rng.randint(1, n))
        lc = LabeledComplete(n, lab)
        got = diameter3_design(lc).num_labels
        gaps[got - design3_optimum(n, lc.label)] += 1
    return gaps


def _write_csv(path: str, rows: list[dict]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)


def _plot_scaling(path: str, rows: list[dict], title: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4.5))
    groups: dict = {}
    for r in rows:
        groups.setdefault(r["strategy"], []).append((r["n"], r["seconds"]))
    for strategy, pts in sorted(groups.items()):
        ns, ts = zip(*sorted(pts))
        ax.loglog(ns, ts, marker="o", label=f"{strategy} (slope {fit_exponent(ns, ts):.2f})")
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _plot_gaps(path: str, gaps: Counter) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 3.5))
    keys = sorted(gaps)
    ax.bar([str(k) for k in keys], [gaps[k] for k in keys])
    ax.set_xlabel("greedy labels minus optimum")
    ax.set_ylabel("instances")
    ax.set_title("diameter-3 design gap")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


EXPERIMENTS = {
    "backup": (time_backup, ("naive", "bottom_up", "range_tree", "segtree_lists")),
    "cluster_sum_sum": (time_cluster, ("generic", "d_table", "e_table_segtree", "deque", "heaps")),
    "cover": (time_cover, ("rescan", "kinetic")),
}


def write_report(outdir: str, quick: bool = False, seed: int = 0, only=None) -> dict:
    """Run every experiment and write ``<name>.csv`` / ``<name>.png`` into ``outdir``.

    Returns the written paths keyed by file name.  ``quick`` shrinks the
    series so the whole report takes seconds.
    """
    os.makedirs(outdir, exist_ok=True)
    written = {}
    all_rows = []
    for name, (timer, strategies) in EXPERIMENTS.items():
        if only and name not in only:
            continue
        ns = _series(name, quick)
        strategies = [s for s in strategies if not (s == "generic" and ns[-1] > 2000)]
        rows = scaling([(name, s, timer) for s in strategies], ns, seed=seed)
        all_rows += rows
        png = os.path.join(outdir, f"{name}.png")
        _plot_scaling(png, rows, name)
        written[f"{name}.png"] = png
    if all_rows:
        path = os.path.join(outdir, "scaling.csv")
        _write_csv(path, all_rows)
        written["scaling.csv"] = path
        path = os.path.join(outdir, "exponents.csv")
        _write_csv(path, exponents(all_rows))
        written["exponents.csv"] = path
    if not only or "design" in only:
        gaps = design_gaps(40 if quick else 200, seed, 8 if quick else 10)
        path = os.path.join(outdir, "design_gaps.csv")
        _write_csv(path, [{"gap": g, "count": c} for g, c in sorted(gaps.items())])
        written["design_gaps.csv"] = path
        png = os.path.join(outdir, "design_gaps.png")
        _plot_gaps(png, gaps)
        written["design_gaps.png"] = png
    return written


def _series(name: str, quick: bool):
    if name == "cover":
        return (10, 20, 40, 80) if quick else (25, 50, 100, 200)
    if name == "cluster_sum_sum" and quick:
        return (100, 200, 400, 800)
    return QUICK_SERIES if quick else SERIES
