"""Command-line front end: ``netopt <subcommand> ...``.

Results go to stdout in a line-oriented grammar (or one JSON document with
``--json``); timings go to stderr.  Exit status is 0 on success, 2 when
the instance is infeasible and 1 on any error, including a failed
``--check``.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import generators as gen
from . import oracles
from .backup import STRATEGIES as BACKUP_STRATEGIES
from .backup import backup_all
from .clustering import FAMILIES, PreconditionError, cluster_generic, solve
from .clustering.textio import format_instance, format_solution, parse_instance
from .design import (
    LabeledComplete,
    check_regular,
    diameter3_design,
    hop_diameter,
    kregular_even,
    kregular_general,
    parse_labels,
)
from .graph import Edge, Graph, GraphFormatError, format_graph, parse_graph
from .latency import RootedTree, retarget, tree_decrease_binary, tree_decrease_unit
from .mobile import LineSet, earliest_cover_time, parse_points

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2

CLUSTER_STRATEGIES = ["generic"] + [s for _fn, names in FAMILIES.values() for s in names]

# exhaustive oracles are only run below these sizes
ORACLE_LIMITS = {"retarget": 8, "treedec": 10, "design3": 10, "cluster": 14, "cover": 60}


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    subcommand: str
    strategy: str | None
    digest: str
    payload: dict
    lines: list
    status: int = EXIT_OK
    wall_us: int = 0
    oracle: dict | None = None
    match: bool | None = None
    notes: list = field(default_factory=list)

    def as_json(self) -> dict:
        out = {"subcommand": self.subcommand, "strategy": self.strategy, "digest": self.digest,
               "status": {EXIT_OK: "ok", EXIT_INFEASIBLE: "infeasible", EXIT_ERROR: "error"}[self.status],
               "result": self.payload}
        if self.match is not None:
            out["check"] = {"match": self.match, "oracle": self.oracle, "notes": self.notes}
        return out


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NETOPT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"NETOPT_SEED must be an integer, got {env!r}") from None


def _num(v):
    if v is None:
        return None
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        if math.isinf(v):
            return "inf"
        if v.is_integer():
            return int(v)
    return v


def _text(v) -> str:
    v = _num(v)
    return "inf" if v == "inf" else str(v)


def _first_diff(a, b):
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i, x, y
    if len(a) != len(b):
        return min(len(a), len(b)), "<missing>", "<missing>"
    return None


def _set_check(rep: RunReport, ok: bool, oracle, mine=None, note: str | None = None) -> None:
    rep.match = ok
    rep.oracle = oracle
    if note:
        rep.notes.append(note)
    if ok:
        rep.lines.append("check: ok" + (f" ({note})" if note else ""))
        return
    rep.status = EXIT_ERROR
    rep.lines.append("check: MISMATCH")
    rep.lines.append(f"check: result {json.dumps(mine)}")
    rep.lines.append(f"check: oracle {json.dumps(oracle)}")
    if isinstance(mine, list) and isinstance(oracle, list):
        d = _first_diff(mine, oracle)
        if d is not None:
            rep.lines.append(f"check: first difference at {d[0]}: {d[1]} != {d[2]}")


def _check_skipped(rep: RunReport, why: str) -> None:
    rep.match = True
    rep.notes.append(why)
    rep.lines.append(f"check: skipped ({why})")


# -- backup -------------------------------------------------------------------

def cmd_backup(args) -> RunReport:
    if args.graph:
        text = _read(args.graph)
        g = parse_graph(text)
    else:
        g = gen.connected_graph(random.Random(_seed(args)), args.random, args.m)
        text = format_graph(g)
    res = backup_all(g, args.src, args.strategy)
    lines, rows = [], []
    for d in range(g.n):
        if d == args.src:
            continue
        bp = _num(res.BP[d])
        path = res.paths[d]
        rows.append({"d": d, "bp": bp, "path": path})
        lines.append(" ".join([str(d), _text(res.BP[d])] + ([str(x) for x in path] if path else [])))
    rep = RunReport("backup", args.strategy, _digest(text), {"src": args.src, "backup": rows}, lines)
    if args.check:
        ref = backup_all(g, args.src, "naive")
        mine = [_num(v) for v in res.BP]
        other = [_num(v) for v in ref.BP]
        _set_check(rep, mine == other, other, mine, "naive")
    return rep


# -- retarget / treedec ---------------------------------------------------------

def _parse_targets(text: str, n: int, src: int) -> list:
    out: list = [None] * n
    out[src] = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split("#", 1)[0].split()
        if not tok:
            continue
        if len(tok) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'd SP(d)'")
        try:
            d = int(tok[0])
            v = math.inf if tok[1] in ("inf", "+inf") else int(tok[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad target") from None
        if not 0 <= d < n:
            raise GraphFormatError(f"line {lineno}: node {d} outside 0..{n - 1}")
        out[d] = v
    missing = [d for d, v in enumerate(out) if v is None]
    if missing:
        raise GraphFormatError(f"targets missing for nodes {missing[:5]}")
    return out


def _relabel(g: Graph, lat) -> Graph:
    return Graph(g.n, [Edge(e.u, e.v, int(a) if float(a).is_integer() else a, e.label, e.lmin)
                       for e, a in zip(g.edges, lat)])


def cmd_retarget(args) -> RunReport:
    if args.graph:
        if not args.targets:
            raise UsageError("--targets is required with --graph")
        text = _read(args.graph)
        g = parse_graph(text)
        targets = _parse_targets(_read(args.targets), g.n, args.src)
        src = args.src
    else:
        g, targets = gen.retarget_instance(random.Random(_seed(args)), args.random)
        src = 0
        text = format_graph(g, True) + " ".join(map(str, targets))
    res = retarget(g, src, targets, args.mode)
    digest = _digest(text + args.mode)
    if not res.feasible:
        rep = RunReport("retarget", args.mode, digest, {"feasible": False}, ["infeasible"], EXIT_INFEASIBLE)
    else:
        lines = [f"cost {_text(res.cost)}"] + format_graph(_relabel(g, res.latencies), True).splitlines()
        rep = RunReport("retarget", args.mode, digest,
                        {"feasible": True, "cost": _num(res.cost), "latencies": [_num(a) for a in res.latencies]},
                        lines)
    if args.check:
        edges = [tuple(e) for e in g.edges]
        if g.n > ORACLE_LIMITS["retarget"]:
            _check_skipped(rep, f"n > {ORACLE_LIMITS['retarget']}")
            return rep
        if args.mode == "exact":
            want = oracles.retarget_bruteforce(g.n, edges, src, targets)
        else:
            spl = oracles.dijkstra_plain(g.n, edges, src)
            want = oracles.retarget_atmost_bruteforce(g.n, edges, src, [min(a, b) for a, b in zip(targets, spl)])
        got = res.cost if res.feasible else math.inf
        ok = got == want
        if ok and res.feasible:
            dist = oracles.dijkstra_plain(g.n, edges, src, res.latencies)
            ok = dist == list(targets) if args.mode == "exact" else all(a <= b for a, b in zip(dist, targets))
        _set_check(rep, ok, _num(want), _num(got), "exhaustive parent choice")
    return rep


def cmd_treedec(args) -> RunReport:
    if args.tree:
        text = _read(args.tree)
        g = parse_graph(text)
        budget = args.budget
    else:
        g, budget = gen.tree_instance(random.Random(_seed(args)), args.random)
        text = format_graph(g, True)
        budget = args.budget if args.budget is not None else budget
    if budget is None or budget < 0:
        raise UsageError("--budget must be a non-negative number")
    tree = RootedTree(g, args.root)
    if args.strategy == "unit":
        if not all(float(e.l).is_integer() for e in g.edges) or not float(budget).is_integer():
            raise UsageError("strategy unit needs integer latencies and budget")
        res = tree_decrease_unit(tree, int(budget))
    else:
        res = tree_decrease_binary(tree, budget, args.eps)
    lines = [f"maxdist {_text(res.max_distance)}", f"cost {_text(res.cost)}"]
    lines += format_graph(_relabel(g, res.latencies), True).splitlines()
    rep = RunReport("treedec", args.strategy, _digest(f"{text}|{budget}|{args.root}"),
                    {"max_distance": _num(res.max_distance), "cost": _num(res.cost),
                     "latencies": [_num(a) for a in res.latencies]}, lines)
    if args.check:
        other = "binary" if args.strategy == "unit" else "unit"
        integral = all(float(e.l).is_integer() for e in g.edges) and float(budget).is_integer()
        if not integral:
            _check_skipped(rep, "real-valued instance")
            return rep
        alt = (tree_decrease_binary(tree, budget) if other == "binary"
               else tree_decrease_unit(tree, int(budget))).max_distance
        want = {other: _num(alt)}
        ok = alt == res.max_distance
        if g.n <= ORACLE_LIMITS["treedec"] and budget <= 40:
            ex = oracles.tree_decrease_bruteforce(g.n, [tuple(e) for e in g.edges], args.root, int(budget))
            want["exhaustive"] = ex
            ok = ok and ex == res.max_distance
        _set_check(rep, ok, want, _num(res.max_distance), "+".join(want))
    return rep


# -- design ---------------------------------------------------------------------

def _centers(spec: str):
    if spec == "all":
        return "all_edges", None, None
    if spec == "fixedx":
        return "fixed_x", None, None
    try:
        if spec.startswith("fixedx:"):
            return "fixed_x", int(spec[7:]), None
        if spec.startswith("edge:"):
            x, y = spec[5:].split(",")
            return "fixed_edge", int(x), int(y)
    except ValueError:
        pass
    raise UsageError(f"bad --centers {spec!r}; valid: all, fixedx, fixedx:X, edge:X,Y")


def cmd_design3(args) -> RunReport:
    if args.labels:
        text = _read(args.labels)
        lc = parse_labels(text)
    else:
        rng = random.Random(_seed(args))
        lab = gen.labels(rng, args.random)
        lc = LabeledComplete(args.random, lab)
        text = "\n".join(f"{u} {v} {a}" for (u, v), a in sorted(lab.items()))
    mode, x, y = _centers(args.centers)
    res = diameter3_design(lc, mode, x, y)
    g = Graph(lc.n, [Edge(u, v, 1, lc.label(u, v)) for u, v in res.edges()])
    lines = [f"# labels {res.num_labels}", f"# center {res.center[0]} {res.center[1]}"]
    lines += format_graph(g, True).splitlines()
    rep = RunReport("design3", mode, _digest(text + args.centers),
                    {"labels": res.num_labels, "center": list(res.center),
                     "edges": [[u, v, lc.label(u, v)] for u, v in res.edges()]}, lines)
    if args.check:
        diam = hop_diameter(lc.n, res.edges())
        ok = diam <= 3
        note = f"hop diameter {_text(diam)}"
        oracle = {"hop_diameter": _num(diam)}
        if ok and lc.n <= ORACLE_LIMITS["design3"]:
            best = oracles.design3_optimum(lc.n, lc.label)
            oracle["optimum"] = best
            ok = best <= res.num_labels
            note += f", gap {res.num_labels - best}"
        _set_check(rep, ok, oracle, res.num_labels, note)
    return rep


def cmd_kregular(args) -> RunReport:
    g = kregular_even(args.n, args.k) if args.even_method else kregular_general(args.n, args.k)
    method = "even" if args.even_method else "general"
    rep = RunReport("kregular", method, _digest(f"{args.n} {args.k} {method}"),
                    {"n": g.n, "edges": [[e.u, e.v] for e in g.edges]}, format_graph(g).splitlines())
    if args.check:
        issues = check_regular(g, args.k)
        _set_check(rep, not issues, issues, [], "degree, simplicity, connectivity")
    return rep


# -- clustering -----------------------------------------------------------------

def cmd_cluster(args) -> RunReport:
    if args.instance:
        text = _read(args.instance)
        inst = parse_instance(text)
    else:
        rng = random.Random(_seed(args))
        if args.strategy == "generic":
            inst = gen.cluster_instance(rng, n=args.random)
        else:
            inst = gen.strategy_instance(rng, args.strategy, n=args.random)
        text = format_instance(inst)
    if args.strategy in ("binary_search",) and args.eps is not None:
        sol = FAMILIES[("max", "sum")][0](inst, args.strategy, eps=args.eps)
    else:
        sol = solve(inst, args.strategy)
    lines = format_solution(sol).splitlines()
    payload = {"feasible": sol.feasible, "value": _num(sol.value),
               "clusters": [[a, b, tc] for a, b, tc in sol.clusters]}
    if sol.approx is not None:
        payload["approx"] = sol.approx
        lines.insert(1, f"# approximate within {sol.approx:g}")
    rep = RunReport("cluster", args.strategy, _digest(text), payload, lines,
                    EXIT_OK if sol.feasible else EXIT_INFEASIBLE)
    if args.check:
        if args.strategy == "generic":
            if inst.n > ORACLE_LIMITS["cluster"]:
                _check_skipped(rep, f"n > {ORACLE_LIMITS['cluster']}")
                return rep
            want, name = oracles.cluster_enumerate(inst), "enumeration"
        else:
            want, name = cluster_generic(inst).value, "generic"
        tol = sol.approx or 0
        ok = (want == sol.value) or (math.isfinite(want) and abs(want - sol.value) <= tol)
        _set_check(rep, ok, _num(want), _num(sol.value), name)
    return rep


# -- mobile cover ---------------------------------------------------------------

def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a number: {s!r}") from None


def cmd_cover(args) -> RunReport:
    if args.points:
        text = _read(args.points)
        xs, ds, vs = parse_points(text)
        ls = LineSet.from_moves(xs, ds, vs, _fraction(args.L), args.K)
    else:
        if args.L is None:
            args.L = "2"
        rng = random.Random(_seed(args))
        n = args.random
        ls = LineSet([rng.randint(-2 * n, 2 * n) for _ in range(n)],
                     [rng.randint(-4, 4) for _ in range(n)], _fraction(args.L), args.K)
        text = "\n".join(f"{x} {w}" for x, w in zip(ls.x, ls.w))
    te = earliest_cover_time(ls, args.strategy)
    digest = _digest(f"{text}|{ls.L}|{ls.K}")
    if te is None:
        rep = RunReport("cover", args.strategy, digest, {"te": None}, ["infeasible"], EXIT_INFEASIBLE)
    else:
        rep = RunReport("cover", args.strategy, digest, {"te": str(te)},
                        [f"te {te.numerator}/{te.denominator}"])
    if args.check:
        other = "rescan" if args.strategy == "kinetic" else "kinetic"
        want = {other: _num(earliest_cover_time(ls, other))}
        ok = want[other] == _num(te)
        if ls.n <= ORACLE_LIMITS["cover"]:
            want["pairwise"] = _num(oracles.earliest_cover_bruteforce(ls.x, ls.w, ls.L, ls.K))
            ok = ok and want["pairwise"] == _num(te)
        _set_check(rep, ok, want, _num(te), "+".join(want))
    return rep


# -- report ---------------------------------------------------------------------

def cmd_report(args) -> RunReport:
    from .report import write_report

    only = args.only.split(",") if args.only else None
    paths = write_report(args.out, quick=args.quick, seed=_seed(args), only=only)
    lines = [f"wrote {name}" for name in sorted(paths)]
    return RunReport("report", "quick" if args.quick else "full", _digest(args.out),
                     {"files": sorted(paths)}, lines)


# -- argument parsing -----------------------------------------------------------

def _nonneg_int(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _budget(s: str):
    v = _fraction(s)
    return int(v) if v.denominator == 1 else float(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--check", action="store_true", help="compare against the designated oracle")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--seed", type=int, default=None, help="seed for --random (env NETOPT_SEED)")
    common.add_argument("--quiet", action="store_true", help="no timing line on stderr")

    p = argparse.ArgumentParser(prog="netopt", description="Network optimisation solvers with oracle checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def source(sp, flag, help_):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument(flag, help=help_)
        grp.add_argument("--random", type=_nonneg_int, metavar="N", help="random instance of size N")

    s = sub.add_parser("backup", parents=[common], help="backup shortest paths")
    source(s, "--graph", "graph file")
    s.add_argument("--src", type=int, default=0)
    s.add_argument("--m", type=int, default=None, help="edge count for --random")
    s.add_argument("--strategy", default="bottom_up")
    s.set_defaults(func=cmd_backup, valid=BACKUP_STRATEGIES)

    s = sub.add_parser("retarget", parents=[common], help="latencies realising target distances")
    source(s, "--graph", "graph file (u v l [label] [lmin])")
    s.add_argument("--src", type=int, default=0)
    s.add_argument("--targets", help="lines 'd SP(d)'")
    s.add_argument("--mode", choices=["exact", "atmost"], default="exact")
    s.set_defaults(func=cmd_retarget, strategy=None)

    s = sub.add_parser("treedec", parents=[common], help="budgeted latency decrease on a tree")
    source(s, "--tree", "tree file in graph format")
    s.add_argument("--budget", type=_budget, default=None)
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--strategy", default="binary")
    s.add_argument("--eps", type=float, default=None, help="search precision for real latencies")
    s.set_defaults(func=cmd_treedec, valid=("unit", "binary"))

    s = sub.add_parser("design3", parents=[common], help="diameter-3 design with few labels")
    source(s, "--labels", "labels file")
    s.add_argument("--centers", default="all", help="all | fixedx | fixedx:X | edge:X,Y")
    s.set_defaults(func=cmd_design3, strategy=None)

    s = sub.add_parser("kregular", parents=[common], help="connected k-regular graph")
    s.add_argument("--n", type=_nonneg_int, required=True)
    s.add_argument("--k", type=_nonneg_int, required=True)
    s.add_argument("--even-method", action="store_true", help="use the even-k insertion construction")
    s.set_defaults(func=cmd_kregular, strategy=None)

    s = sub.add_parser("cluster", parents=[common], help="consecutive clustering on a line")
    source(s, "--instance", "instance file")
    s.add_argument("--strategy", default="generic")
    s.add_argument("--eps", type=float, default=None, help="precision for binary_search on real weights")
    s.set_defaults(func=cmd_cluster, valid=CLUSTER_STRATEGIES)

    s = sub.add_parser("cover", parents=[common], help="earliest time K intervals cover moving points")
    source(s, "--points", "lines 'x d v'")
    s.add_argument("--L", default=None)
    s.add_argument("--K", type=int, required=True)
    s.add_argument("--strategy", default="kinetic")
    s.set_defaults(func=cmd_cover, valid=("rescan", "kinetic"))

    s = sub.add_parser("report", parents=[common], help="timing series and figures")
    s.add_argument("--out", default="report")
    s.add_argument("--quick", action="store_true", help="small series, runs in seconds")
    s.add_argument("--only", default=None, help="comma list of backup, cluster_sum_sum, cover, design")
    s.set_defaults(func=cmd_report, strategy=None)
    return p


def dispatch(argv) -> RunReport:
    """Parse ``argv`` and run one subcommand; raises on usage or input errors."""
    args = build_parser().parse_args(argv)
    valid = getattr(args, "valid", None)
    if valid is not None and args.strategy not in valid:
        raise UsageError(f"unknown strategy {args.strategy!r}; valid: {', '.join(valid)}")
    if args.command == "cover" and args.points and args.L is None:
        raise UsageError("--L is required with --points")
    t = time.perf_counter()
    rep = args.func(args)
    rep.wall_us = int((time.perf_counter() - t) * 1e6)
    return rep


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    want_json = "--json" in argv
    quiet = "--quiet" in argv
    try:
        rep = dispatch(argv)
    except SystemExit as exc:  # argparse already printed its message
        return EXIT_ERROR if exc.code else EXIT_OK
    except (UsageError, PreconditionError, ValueError) as exc:
        if want_json:
            print(json.dumps({"status": "error", "error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if want_json:
        print(json.dumps(rep.as_json(), sort_keys=True))
    else:
        for line in rep.lines:
            print(line)
    if not quiet:
        print(f"time_us {rep.wall_us}", file=sys.stderr)
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
