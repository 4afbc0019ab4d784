from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from sumfree.intset import IntSet
from sumfree.oracles import (ap_cover_check, ap_cover_check_naive,
                             conjecture41_search, example42, plunnecke_check,
                             plunnecke_sweep, verify_bootstrap,
                             verify_lev_smeliansky_diff, verify_long_interval,
                             verify_summation)


def test_long_interval_small_clean():
    rep = verify_long_interval(10)
    assert rep.ok and rep.instances_checked > 0
    with pytest.raises(ValueError):
        verify_long_interval(21)


def test_summation_slack_verdicts():
    rep = verify_summation(5, 6)
    assert rep.ok  # no failures once one unit of slack is allowed
    assert rep.notes["strict_failures"] > 0
    assert rep.notes["strict_failures_all_on_eps0_boundary"]


def test_bootstrap_clean():
    rep = verify_bootstrap(10)
    assert rep.ok and rep.instances_checked > 0
    with pytest.raises(ValueError):
        verify_bootstrap(19)


def test_lev_smeliansky_clean():
    rep = verify_lev_smeliansky_diff(10)
    assert rep.ok and rep.instances_checked > 0
    with pytest.raises(ValueError):
        verify_lev_smeliansky_diff(17)


def test_ap_cover_single_progression():
    cover = ap_cover_check(IntSet.of([2, 5, 8, 11]), 1, 4)
    assert cover is not None and cover.step == 3 and cover.total_length == 4
    assert ap_cover_check(IntSet.of([0, 1, 5]), 1, 6) is not None
    assert ap_cover_check(IntSet.of([0, 1, 5]), 1, 5) is None


def test_ap_cover_two_progressions():
    a = IntSet.of([0, 1, 2, 10, 11, 12])
    cover = ap_cover_check(a, 2, 6)
    assert cover is not None and cover.total_length == 6 and cover.covers(a)
    assert ap_cover_check(a, 2, 5) is None


def test_ap_cover_two_classes_same_step():
    a = IntSet.of([0, 3, 6, 1, 4])  # residues 0 and 1 mod 3
    cover = ap_cover_check(a, 2, 5)
    assert cover is not None and cover.total_length == 5


def test_ap_cover_rejects_bad_args():
    with pytest.raises(ValueError):
        ap_cover_check(IntSet(0), 1, 5)
    with pytest.raises(ValueError):
        ap_cover_check(IntSet.of([1]), 3, 5)


def _agree(a, count, budget):
    fast = ap_cover_check(a, count, budget)
    slow = ap_cover_check_naive(a, count, budget)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert fast.covers(a) and fast.total_length <= budget
        assert slow.covers(a) and slow.total_length <= budget


def test_ap_cover_matches_naive_exhaustively():
    for size in range(1, 6):
        for elems in combinations(range(9), size):
            a = IntSet.of(elems)
            for count in (1, 2):
                for budget in (size, size + 2, 2 * size + 3):
                    _agree(a, count, budget)


@given(st.sets(st.integers(0, 12), min_size=1, max_size=6),
       st.integers(1, 2), st.integers(1, 16))
@settings(max_examples=150)
def test_ap_cover_matches_naive_sampled(elems, count, budget):
    _agree(IntSet.of(elems), count, budget)


@pytest.mark.parametrize("x", range(1, 6))
@pytest.mark.parametrize("stretch", (0, 3))
def test_example42_difference_count(x, stretch):
    rec = example42(x, 4 * x + stretch)
    assert rec.size == 3 * x
    assert rec.diff_size == 10 * x - 5
    assert rec.r == x - 2


@pytest.mark.parametrize("x", (3, 4, 5))
def test_example42_conclusions_fail(x):
    rec = example42(x, 4 * x)
    assert rec.conclusion_i is False and rec.conclusion_ii is False


def test_example42_small_x_undetermined():
    rec = example42(2, 8)
    assert rec.conclusion_i is None and rec.conclusion_ii is None
    with pytest.raises(ValueError):
        example42(3, 11)  # y < 4x: copies of the block would collide


def test_conjecture41_search_small():
    res = conjecture41_search(max_size=6, max_span=14)
    assert res.sets_enumerated > 0
    assert res.in_range == 0  # open range is empty until |A| >= 10
    assert not res.candidates


def test_plunnecke_single_and_sweep():
    rep = plunnecke_check(IntSet.of([0, 1, 3]), 4)
    assert rep.ok
    sweep = plunnecke_sweep(7, 4)
    assert sweep.ok and sweep.instances_checked > 0
    with pytest.raises(ValueError):
        plunnecke_check(IntSet(0), 3)
    with pytest.raises(ValueError):
        plunnecke_check(IntSet.of([1]), 6)
