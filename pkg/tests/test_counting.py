import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sumfree.counting import (CapExceededError, count_small_sumset_sets,
                              count_sum_free, count_two_wise_sum_free, entropy,
                              entropy_binomial_check, forbidden_graph,
                              green_morris_bound, janson_bound,
                              janson_count_exact, janson_quantities,
                              restricted_partition_count, restricted_partitions)
from sumfree.intset import IntSet

# Frozen oracle values (validated against an independent brute-force
# partition filter before being recorded here).
SF1_SMALL = [2, 3, 6, 9, 16, 24, 42, 61, 108, 151, 253, 369]
SF2_SMALL = [2, 4, 8, 16, 31, 62, 124, 246, 488, 940]


@pytest.mark.parametrize("engine", ("dfs", "naive"))
def test_sum_free_counts_small(engine):
    for n, expected in enumerate(SF1_SMALL, start=1):
        assert count_sum_free(n, engine=engine).exact_count == expected


@pytest.mark.parametrize("engine", ("dfs", "naive"))
def test_two_wise_counts_small(engine):
    for n, expected in enumerate(SF2_SMALL, start=1):
        assert count_two_wise_sum_free(n, engine=engine).exact_count == expected


def test_count_record_fields():
    rec = count_sum_free(10)
    assert rec.family == "sf1" and rec.engine == "dfs"
    assert rec.benchmark_exponent == Fraction(10, 2)
    assert rec.ratio == pytest.approx(151 / 2 ** 5)
    rec = count_two_wise_sum_free(10)
    assert rec.benchmark_exponent == Fraction(8, 1)
    assert rec.exact_count == 940


def test_thread_counts_agree():
    for threads in (1, 2, 4):
        assert count_sum_free(14, threads=threads).exact_count == \
            count_sum_free(14).exact_count
        assert count_two_wise_sum_free(12, threads=threads).exact_count == \
            count_two_wise_sum_free(12).exact_count


def test_two_wise_dominates_trivial_lower_bound():
    # every subset of the union of two fixed sum-free parts splits
    for n in range(1, 13):
        assert count_two_wise_sum_free(n).exact_count >= 2 ** (n - n // 5)


def test_caps_and_bad_args():
    with pytest.raises(CapExceededError):
        count_sum_free(23, engine="naive")
    with pytest.raises(CapExceededError):
        count_two_wise_sum_free(25, engine="dfs")
    with pytest.raises(ValueError):
        count_sum_free(-1)
    with pytest.raises(ValueError):
        count_sum_free(5, engine="magic")


def test_cap_override(monkeypatch):
    monkeypatch.setenv("SUMFREE_MAX_N", "10")
    with pytest.raises(CapExceededError):
        count_sum_free(11, engine="naive")


def test_entropy_values():
    assert entropy(0.0) == 0.0 and entropy(1.0) == 0.0
    assert entropy(0.5) == pytest.approx(1.0)
    assert entropy(1 / 3) == pytest.approx(math.log2(3) - 2 / 3)
    with pytest.raises(ValueError):
        entropy(1.5)


@given(st.floats(0.001, 0.999))
def test_entropy_symmetric(x):
    assert entropy(x) == pytest.approx(entropy(1 - x))


def test_entropy_binomial_check():
    rep = entropy_binomial_check(20, 7, 0.35)
    assert rep.satisfied
    assert rep.exact_value == math.comb(20, 7)
    with pytest.raises(ValueError):
        entropy_binomial_check(10, 11, 0.2)
    with pytest.raises(ValueError):
        entropy_binomial_check(10, 3, 0.7)


def test_restricted_partition_counts():
    # partitions into distinct positive parts
    assert restricted_partition_count(6, 3) == 1  # 1+2+3
    assert restricted_partition_count(10, 2) == 4  # 1+9, 2+8, 3+7, 4+6
    assert restricted_partition_count(3, 3) == 0
    assert restricted_partition_count(0, 0) == 1
    # row sums against a direct enumeration
    from itertools import combinations
    for k in range(1, 16):
        for l in range(1, 6):
            direct = sum(1 for combo in combinations(range(1, k + 1), l)
                         if sum(combo) == k)
            assert restricted_partition_count(k, l) == direct


def test_restricted_partitions_bound():
    rep = restricted_partitions(40, 5)
    assert rep.satisfied and rep.exact_value == restricted_partition_count(40, 5)
    with pytest.raises(ValueError):
        restricted_partitions(0, 1)


def test_green_morris_advisory():
    rep = green_morris_bound(0.5, 3.0, 6, 12, brute=True)
    assert rep.parameters["advisory"]
    assert rep.exact_value == count_small_sumset_sets(12, 6, 3.0)
    assert green_morris_bound(0.5, 3.0, 6, 12).exact_value is None
    with pytest.raises(ValueError):
        green_morris_bound(0.0, 3.0, 6, 12)


def test_janson_quantities_example():
    u = [frozenset({1, 2}), frozenset({2, 3}), frozenset({4})]
    mu, delta = janson_quantities(u, 4)
    assert mu == Fraction(1)  # 1/4 + 1/4 + 1/2
    assert delta == Fraction(2, 8)  # the overlapping pair, both orders
    with pytest.raises(ValueError):
        janson_quantities([frozenset({9})], 4)


def test_janson_bound_holds_on_example():
    u = [frozenset({1, 2}), frozenset({2, 3})]
    rep = janson_bound(u, 3, brute=True)
    assert rep.satisfied
    assert rep.exact_value == janson_count_exact(u, 3, Fraction(1, 4))


def test_janson_empty_family_vacuous():
    rep = janson_bound([], 5, brute=True)
    assert rep.bound_value == 32 and rep.exact_value == 32 and rep.satisfied


def test_janson_brute_cap():
    with pytest.raises(CapExceededError):
        janson_bound([frozenset({1})], 21, brute=True)


@given(st.lists(st.sets(st.integers(1, 8), min_size=1, max_size=3),
                max_size=5), st.integers(8, 10))
@settings(max_examples=60)
def test_janson_bound_property(u_sets, gamma_size):
    rep = janson_bound([frozenset(u) for u in u_sets], gamma_size, brute=True)
    assert rep.satisfied


def test_forbidden_graph_shape():
    g = forbidden_graph(IntSet.of([1, 3]), 25)
    assert g.vertices == tuple(range(6, 11))
    assert all(y - x in (1, 3) for x, y in g.edges)
    assert g.mu == Fraction(g.edge_count, 4)
    assert g.delta_upper == Fraction(g.edge_count * 2, 2)
    assert g.degree_ok


def test_forbidden_graph_degree_bound_random():
    import random
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(10, 60)
        shifts = IntSet.of(rng.sample(range(1, 10), rng.randrange(1, 5)))
        assert forbidden_graph(shifts, n).degree_ok
