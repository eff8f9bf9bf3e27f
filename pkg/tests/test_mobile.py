from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netopt.generators import line_set
from netopt.mobile import (
    KineticCover,
    LineSet,
    _batches,
    earliest_cover_time,
    event_set,
    min_intervals_at,
    parse_points,
    sorted_order,
)
from netopt.oracles import cover_count_bruteforce, earliest_cover_bruteforce

F = Fraction


def approaching():
    return LineSet([0, 10], [1, -1], 2, 1)


def count_at(ls, t):
    return cover_count_bruteforce([ls.y(i, t) for i in range(ls.n)], ls.L)


def test_min_intervals_small():
    assert min_intervals_at(LineSet([3], [0], 1, 1), 0)[0][0] == 1
    m, nxt, last = min_intervals_at(LineSet([0, 10], [0, 0], 2, 1), 0)
    assert m[0] == 2 and nxt[0] == 1 and last[0] == 1
    with pytest.raises(ValueError):
        min_intervals_at(LineSet([0, 1], [0, 0], 1, 1), 0, 1, 0)


def test_min_intervals_against_greedy():
    rng = random.Random(11)
    for _ in range(20):
        ls = LineSet([rng.randint(0, 100) for _ in range(50)], [0] * 50, rng.randint(1, 12), 1)
        assert min_intervals_at(ls, 0)[0][0] == count_at(ls, 0)


def test_events_of_two_approaching_points():
    ev = event_set(approaching())
    assert [(e.time, e.kind) for e in ev] == [(0, "start"), (4, "close"), (5, "cross"), (6, "close")]


def test_stationary_and_parallel_points_only_start():
    assert len(event_set(LineSet([0, 4], [0, 0], 1, 1))) == 1
    # separated by exactly L forever: tangent, not transversal
    assert len(event_set(LineSet([0, 2], [3, 3], 2, 1))) == 1


def test_earliest_examples():
    for s in ("rescan", "kinetic"):
        assert earliest_cover_time(approaching(), s) == 4
        assert earliest_cover_time(LineSet([0, 1, 2], [5, -1, 2], 2, 1), s) == 0
        assert earliest_cover_time(LineSet([0, 50, 99], [1, -3, 2], 1, 3), s) == 0
        assert earliest_cover_time(LineSet([0, 10], [-1, 1], 2, 1), s) is None


def test_rational_event_times():
    ls = LineSet([0, 7], [2, -1], 1, 1)
    assert earliest_cover_time(ls, "kinetic") == F(2)
    ls = LineSet([0, 7], [2, -2], 1, 1)
    assert earliest_cover_time(ls, "rescan") == F(3, 2)


def test_bad_inputs():
    with pytest.raises(ValueError):
        LineSet([0], [0], 0, 1)
    with pytest.raises(ValueError):
        LineSet([0], [0], 1, 0)
    with pytest.raises(ValueError):
        LineSet([], [], 1, 1)
    with pytest.raises(ValueError):
        LineSet.from_moves([0], [2], [1], 1, 1)
    with pytest.raises(ValueError, match="valid"):
        earliest_cover_time(approaching(), "psychic")


def test_parse_points():
    xs, ds, vs = parse_points("0 1 1\n# gap\n\n10 -1 0.5\n")
    assert xs == [0, 10] and ds == [1, -1] and vs == [1, F(1, 2)]
    with pytest.raises(ValueError, match="line 2"):
        parse_points("0 1 1\n3 1\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_points("a 1 1\n")


def test_from_moves_signs_speeds():
    ls = LineSet.from_moves([0, 10], [1, -1], [1, 1], 2, 1)
    assert ls.w == [1, -1]


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2, 3, None]))
def test_kinetic_tables_match_scratch(seed, group):
    ls = line_set(random.Random(seed), n_max=14)
    kc = KineticCover(ls, group)
    for t, batch in _batches(event_set(ls)):
        m = kc.step(t, batch)
        assert m == count_at(ls, t)
        assert kc.check() == []
        assert kc.order == sorted_order(ls, t)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6))
def test_strategies_agree_with_pairwise_oracle(seed):
    ls = line_set(random.Random(seed), n_max=20)
    a, b = [], []
    te = earliest_cover_time(ls, "kinetic", a)
    assert te == earliest_cover_time(ls, "rescan", b)
    assert a == b
    assert te == earliest_cover_bruteforce(ls.x, ls.w, ls.L, ls.K)


def interior_samples(ls):
    """Counts at several rational times inside each gap between events."""
    times = sorted({e.time for e in event_set(ls)})
    gaps = list(zip(times, times[1:])) + [(times[-1], times[-1] + 7)]
    for lo, hi in gaps:
        yield [count_at(ls, lo + (hi - lo) * F(k, 11)) for k in range(1, 11)]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_count_constant_between_events(seed):
    ls = line_set(random.Random(seed), n_max=12)
    for counts in interior_samples(ls):
        assert len(set(counts)) == 1
