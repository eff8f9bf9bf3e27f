from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netopt.clustering import (
    FAMILIES,
    ClusterInstance,
    PreconditionError,
    cluster_generic,
    derive_bounds,
    evaluate,
    solve,
)
from netopt.clustering.max_sum import cluster_max_sum
from netopt.clustering.textio import InstanceFormatError, format_instance, format_solution, parse_instance
from netopt.generators import cluster_instance, strategy_families, strategy_instance
from netopt.oracles import cluster_enumerate

INF = math.inf
STRATEGIES = sorted(strategy_families())


def test_unconstrained_bounds():
    inst = ClusterInstance([1, 2, 3, 4], x=[0, 1, 2, 3], lmax=[INF] * 4, lmin=[0] * 4)
    assert inst.lo[1:, 0, 0].tolist() == [1, 1, 1, 1]
    assert inst.hi[1:, 0, 0].tolist() == [1, 2, 3, 4]


def test_length_window_bounds():
    inst = ClusterInstance([1, 2, 3, 4], x=[0, 1, 2, 3], lmax=[1.5] * 4)
    assert inst.lo[1:, 0, 0].tolist() == [1, 1, 2, 3]


def test_weight_bounds():
    assert ClusterInstance([1, 2, 3, 4], wmax=[10] * 4).lo[1:, 0, 0].tolist() == [1, 1, 1, 1]
    # u = 0 marks a point that cannot end any cluster
    assert ClusterInstance([1, 2, 3, 4], wmin=[3] * 4).hi[1:, 0, 0].tolist() == [0, 1, 3, 4]


def test_bounds_validation():
    with pytest.raises(ValueError):
        ClusterInstance([1, 2], l=[1, 4])
    with pytest.raises(ValueError):
        ClusterInstance([1, 2], x=[2, 1])
    with pytest.raises(ValueError):
        ClusterInstance([1, 2], lmax=[1, 2, 3])
    with pytest.raises(ValueError):
        ClusterInstance([-1, 2], wmax=[5, 5])
    with pytest.raises(ValueError):
        ClusterInstance([1, 2], k=3)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_sweep_and_bsearch_agree(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 25)
    x = sorted(rng.randint(0, 40) for _ in range(n))
    w = [rng.randint(0, 9) for _ in range(n)]
    c = rng.randint(0, 20)
    kw = dict(x=x, lmax=[c + 5] * n, lmin=[rng.randint(0, 4)] * n, wmax=[c + 9] * n, wmin=[rng.randint(0, 6)] * n)
    a = ClusterInstance(w, bound_method="sweep", **kw)
    b = ClusterInstance(w, bound_method="bsearch", **kw)
    assert (a.lo == b.lo).all() and (a.hi == b.hi).all()
    lo, hi = derive_bounds(a, "auto")
    assert (lo == a.lo).all() and (hi == a.hi).all()


def test_generic_examples():
    assert cluster_generic(ClusterInstance([1, 2, 3], F=1, k=2)).value == 8
    r = cluster_generic(ClusterInstance([3, 1, 2], F=0, k=2, objf="max"))
    assert r.value == 3 and [c[:2] for c in r.clusters] == [(1, 1), (2, 3)]
    w = [[4, 2], [1, 6], [3, 3]]
    for ctype in ("sum", "max"):
        r = cluster_generic(ClusterInstance(w, F=2, objf="max", ctype=ctype))
        assert r.value == 2 + max(min(row) for row in w)
        assert len(r.clusters) == 3


def test_infeasible_bounds():
    inst = ClusterInstance([1, 1, 1], k=1, l=[1, 2, 3])
    r = cluster_generic(inst)
    assert not r.feasible and r.clusters == []
    assert format_solution(r) == "infeasible\n"


def test_specialised_examples():
    assert solve(ClusterInstance([5, 1, 1], ctype="max"), "stacks").value == 5
    assert solve(ClusterInstance([4, 4, 4], F=2, ctype="max"), "deque_heap").value == 6
    assert solve(ClusterInstance([3, 1, 2], k=2, objf="max"), "pointer_deque").value == 3
    w = [2, 7, 1, 5]
    assert solve(ClusterInstance(w, F=1, k=4, objf="max"), "range_trees").value == 8
    assert solve(ClusterInstance([[3, 1], [1, 5], [2, 2]], F=1, k=1, objf="max", ctype="max"),
                 "pointer_rmq").value == 4
    assert solve(ClusterInstance([4, 1, 4], k=2, objf="max", ctype="max"), "binary_search_sorted").value == 4
    for s in ("d_table", "e_table_segtree", "deque", "heaps"):
        assert solve(ClusterInstance([[6, 2]], F=3), s).value == 5


def test_negative_weights_for_sum_objective():
    inst = ClusterInstance([3, -4, 2, -1, 5], F=1, k=3)
    want = cluster_enumerate(inst)
    for s in ("d_table", "e_table_segtree", "deque", "heaps"):
        assert solve(inst, s).value == want


def test_max_objective_keeps_negative_costs():
    # the empty prefix must not act as a zero cost under max
    inst = ClusterInstance([[[-5], [-3]], [[-2], [-4]]], F=-1, k=2, objf="max", per_cluster=True)
    r = cluster_generic(inst)
    assert r.value == cluster_enumerate(inst) < 0
    inst = ClusterInstance([1, 2, 3], F=-10, objf="max")
    assert cluster_generic(inst).value == cluster_enumerate(inst)


def test_real_weights_binary_search_is_flagged():
    inst = ClusterInstance(np.array([1.5, 0.25, 2.0, 0.75]), F=0.5, k=2, objf="max")
    r = cluster_max_sum(inst, "binary_search", eps=1e-9)
    assert r.approx == 1e-9
    assert abs(r.value - cluster_generic(inst).value) <= r.approx
    assert solve(inst, "pointer_deque").approx is None


def test_real_binary_search_single_cluster_budget():
    # F + w - F rounds below w for these values; the whole line must still fit
    w = np.array([0.4, 0.7, 0.1, 0.7])
    inst = ClusterInstance(w, F=0.1, k=1, objf="max")
    r = cluster_max_sum(inst, "binary_search", eps=1e-12)
    assert r.clusters == [(1, 4, 0)]
    assert abs(r.value - (0.1 + w.sum())) <= 1e-12


@pytest.mark.parametrize("strategy, inst, needs", [
    ("d_table", ClusterInstance([1, 2, 3], l=[1, 2, 2]), "l"),
    ("stacks", ClusterInstance([1, 2, 3], ctype="max", u=[1, 1, 3]), "u"),
    ("deque", ClusterInstance([1, 2, 3], l=[1, 2, 1]), "non-decreasing l"),
    ("pointer_rmq", ClusterInstance([1, 2, 3], objf="max", ctype="max", u=[1, 2, 1]), "non-decreasing u"),
    ("heaps", ClusterInstance([1, 2, 3], objf="max"), "objf=sum"),
    ("range_trees", ClusterInstance([1, -2, 3], objf="max"), "non-negative"),
    ("binary_search", ClusterInstance([[1, 2], [3, 4]], k=2, per_cluster=False, objf="max", l=[1, 2]), "l"),
])
def test_preconditions_are_named(strategy, inst, needs):
    with pytest.raises(PreconditionError, match=needs):
        solve(inst, strategy)


def test_unknown_strategy():
    with pytest.raises(ValueError, match="valid"):
        solve(ClusterInstance([1]), "quantum")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_generic_matches_enumeration(seed):
    rng = random.Random(seed)
    inst = cluster_instance(rng, n_max=9, bounds=rng.choice(["free", "window", "lmin", "explicit"]),
                            ccost=rng.choice(["min", "min", "max", "sum"]), negative=rng.random() < 0.2)
    r = cluster_generic(inst)
    assert r.value == cluster_enumerate(inst)
    if r.feasible:
        assert evaluate(inst, r.clusters) == r.value
        if inst.k is not None:
            assert len(r.clusters) == inst.k


@pytest.mark.parametrize("strategy", STRATEGIES)
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_specialisation_matches_generic(strategy, seed):
    inst = strategy_instance(random.Random(seed), strategy, n_max=25)
    r = solve(inst, strategy)
    assert r.value == cluster_generic(inst).value
    if r.feasible:
        assert evaluate(inst, r.clusters) == r.value


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_absent_k_is_best_fixed_k(seed):
    rng = random.Random(seed)
    inst = cluster_instance(rng, n_max=7, k=None, bounds=rng.choice(["free", "window"]))
    best = min(cluster_generic(ClusterInstance(inst.weights, F=inst.F, k=k, objf=inst.objf, ctype=inst.ctype,
                                               x=inst.x, lmax=inst.lmax, lmin=inst.lmin)).value
               for k in range(1, inst.n + 1))
    assert cluster_generic(inst).value == best


def test_families_cover_all_strategies():
    listed = sorted(s for _fn, names in FAMILIES.values() for s in names)
    assert listed == STRATEGIES


def test_text_round_trip():
    text = "4 2 2 1 sum sum,max\nweights\n1 2\n3 4\n5 6\n7 8\nx\n0 1\n2 3\nlmax\n2 2\n2 2\n2 2\n2 2\n"
    inst = parse_instance(text)
    assert inst.k == 2 and inst.ctypes == ["sum", "max"]
    assert inst.xs[1:] == [0, 1, 2, 3]
    again = parse_instance(format_instance(inst))
    assert (again.lo == inst.lo).all() and (again.w == inst.w).all()
    sol = cluster_generic(inst)
    lines = format_solution(sol).splitlines()
    assert lines[0] == str(sol.value) and len(lines) == 3


def test_text_per_cluster_weights():
    text = "2 1 2 0 sum sum\nweights per_cluster\n1 9\n9 1\n"
    inst = parse_instance(text)
    assert inst.J == 2
    assert cluster_generic(inst).value == 2


@pytest.mark.parametrize("text, where", [
    ("", "line 1"),
    ("2 1 0 sum\n", "line 1"),
    ("2 1 0 sum sum\nweights\n1\n", "line 2"),
    ("2 1 0 sum sum\nweights\n1 2\n3\n", "line 3"),
    ("2 1 0 sum sum\nweights\n1\nx2\n", "line 4"),
    ("2 1 0 sum sum\nweights\n1\n2\nbogus\n", "line 5"),
    ("2 1 0 sum sum\n", "missing weights"),
    ("2 1 0 sum sum\nweights per_cluster\n1\n2\n", "need k"),
])
def test_text_errors(text, where):
    with pytest.raises(InstanceFormatError, match=where):
        parse_instance(text)
