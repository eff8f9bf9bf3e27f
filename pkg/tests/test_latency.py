from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netopt.generators import retarget_instance, tree_instance
from netopt.graph import Graph, dijkstra
from netopt.latency import (
    RootedTree,
    retarget,
    retarget_atmost,
    retarget_exact,
    tree_decrease_binary,
    tree_decrease_unit,
)
from netopt.oracles import (
    dijkstra_plain,
    retarget_atmost_bruteforce,
    retarget_bruteforce,
    tree_decrease_bruteforce,
)

INF = math.inf


def test_single_edge_lowered():
    r = retarget_exact(Graph(2, [(0, 1, 5)]), 0, [0, 3])
    assert r.feasible and r.latencies == [3] and r.cost == 2


def test_single_edge_raised():
    r = retarget_exact(Graph(2, [(0, 1, 2)]), 0, [0, 5])
    assert r.latencies == [5] and r.cost == 3


def test_detour_realises_target_for_free():
    g = Graph(3, [(0, 1, 4, 1, 3), (0, 2, 1), (2, 1, 1, 1, 1)])
    r = retarget_exact(g, 0, [0, 2, 1])
    assert r.cost == 0 and r.latencies == [4, 1, 1]


def test_lower_bound_makes_exact_infeasible():
    r = retarget_exact(Graph(2, [(0, 1, 5, 1, 4)]), 0, [0, 3])
    assert not r.feasible and r.cost == INF


def test_atmost_examples():
    g = Graph(3, [(0, 1, 2), (1, 2, 2)])
    r = retarget_atmost(g, 0, [0, 100, 100])
    assert r.feasible and r.cost == 0 and r.latencies == [2, 2]
    r = retarget_atmost(Graph(2, [(0, 1, 5, 1, 4)]), 0, [0, 3])
    assert not r.feasible


def test_atmost_clamped_targets_can_be_infeasible():
    # lowering src-a would serve both b and c, but clamping pins a at 5
    g = Graph(4, [(0, 1, 5), (1, 2, 1, 1, 1), (1, 3, 1, 1, 1)])
    r = retarget_atmost(g, 0, [0, 10, 3, 3])
    assert not r.feasible


def test_retarget_validation():
    g = Graph(2, [(0, 1, 1)])
    with pytest.raises(ValueError):
        retarget(g, 0, [0, 1], "approx")
    with pytest.raises(ValueError):
        retarget_exact(g, 0, [1, 1])
    with pytest.raises(ValueError):
        retarget_exact(g, 0, [0])
    with pytest.raises(ValueError):
        retarget_exact(g, 0, [0, -1])


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_exact_matches_exhaustive(seed):
    g, sp = retarget_instance(random.Random(seed))
    edges = [tuple(e) for e in g.edges]
    r = retarget_exact(g, 0, sp)
    assert (r.cost if r.feasible else INF) == retarget_bruteforce(g.n, edges, 0, sp)
    if r.feasible:
        assert dijkstra_plain(g.n, edges, 0, r.latencies) == sp
        assert all(a >= e.lmin for a, e in zip(r.latencies, g.edges))
        assert r.cost == sum(abs(a - e.l) for a, e in zip(r.latencies, g.edges))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_atmost_matches_exhaustive(seed):
    g, sp = retarget_instance(random.Random(seed))
    edges = [tuple(e) for e in g.edges]
    clamped = [min(a, b) for a, b in zip(sp, dijkstra(g, 0))]
    r = retarget_atmost(g, 0, sp)
    assert (r.cost if r.feasible else INF) == retarget_atmost_bruteforce(g.n, edges, 0, clamped)
    if r.feasible:
        dist = dijkstra_plain(g.n, edges, 0, r.latencies)
        assert all(a <= b for a, b in zip(dist, sp))
        assert all(e.lmin <= a <= e.l for a, e in zip(r.latencies, g.edges))


def _tree(edges, n=None):
    return RootedTree(Graph(n or len(edges) + 1, edges))


def test_unit_single_edge():
    t = _tree([(0, 1, 10, 1, 2)])
    r = tree_decrease_unit(t, 5)
    assert (r.max_distance, r.cost) == (5, 5)
    r = tree_decrease_unit(t, 100)
    assert (r.max_distance, r.cost) == (2, 8)
    assert r.latencies == [2]


def test_binary_examples():
    assert tree_decrease_binary(_tree([(0, 1, 10, 1, 2)]), 5).max_distance == 5
    path = _tree([(0, 1, 5), (1, 2, 5)])
    assert tree_decrease_binary(path, 4).max_distance == 6
    assert tree_decrease_unit(path, 4).max_distance == 6
    assert tree_decrease_binary(path, 0).max_distance == 10


def test_unit_prefers_shared_edges():
    # one unit on the root edge lowers both leaves at once
    t = _tree([(0, 1, 3), (1, 2, 2), (1, 3, 2)])
    r = tree_decrease_unit(t, 2)
    assert r.max_distance == 3 and r.latencies == [1, 2, 2]


def test_binary_real_latencies():
    t = _tree([(0, 1, 2.5, 1, 0.5), (0, 2, 1.25)])
    r = tree_decrease_binary(t, 1.0, eps=1e-9)
    assert r.max_distance == pytest.approx(1.5, abs=1e-8)
    assert r.cost <= 1.0 + 1e-9


def test_tree_validation():
    with pytest.raises(ValueError):
        RootedTree(Graph(3, [(0, 1, 1)]))
    with pytest.raises(ValueError):
        RootedTree(Graph(2, [(0, 1, 1)]), root=5)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6))
def test_tree_strategies_match_exhaustive(seed):
    g, budget = tree_instance(random.Random(seed))
    t = RootedTree(g)
    a = tree_decrease_unit(t, budget)
    b = tree_decrease_binary(t, budget)
    want = tree_decrease_bruteforce(g.n, [tuple(e) for e in g.edges], 0, budget)
    assert a.max_distance == b.max_distance == want
    for r in (a, b):
        assert r.cost <= budget
        assert all(e.lmin <= x <= e.l for x, e in zip(r.latencies, g.edges))
        dist = dijkstra(g.with_latencies(r.latencies), 0)
        assert max(dist) == r.max_distance


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_more_budget_never_hurts(seed):
    g, budget = tree_instance(random.Random(seed))
    t = RootedTree(g)
    ds = [tree_decrease_binary(t, c).max_distance for c in range(budget + 3)]
    assert ds == sorted(ds, reverse=True)
