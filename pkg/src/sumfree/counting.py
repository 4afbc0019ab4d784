"""Exact enumeration of sum-free families and the computable bound formulas.

|SF1(n)| counts sum-free subsets of [n]; |SF2(n)| counts subsets that split
into two sum-free parts.  Both are computed by two independent engines (a
naive full-subset filter and a pruned DFS) and tracked against their
exponential benchmarks 2^(n/2) and 2^(4n/5).  The bound formulas (binary
entropy, restricted partitions, small-sumset counts, Janson's lower tail)
are evaluated with exact big-integer combinatorics wherever possible.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import kernels
from .intset import IntSet, sumset

NAIVE_CAP_SF1 = 22
DFS_CAP_SF1 = 34
NAIVE_CAP_SF2 = 16
DFS_CAP_SF2 = 24

FLOAT_TOL = 1e-9


class CapExceededError(ValueError):
    """An enumeration was refused because n exceeds its budgeted cap."""


def _cap(default: int) -> int:
    override = os.environ.get("SUMFREE_MAX_N")
    return int(override) if override else default


@dataclass(frozen=True)
class CountRecord:
    n: int
    family: str  # "sf1" or "sf2"
    exact_count: int
    benchmark_exponent: Fraction
    ratio: float  # exact_count / 2^benchmark_exponent
    engine: str = "dfs"

    @classmethod
    def build(cls, n: int, family: str, count: int, engine: str) -> "CountRecord":
        exponent = Fraction(n, 2) if family == "sf1" else Fraction(4 * n, 5)
        ratio = count / 2 ** float(exponent)
        return cls(n, family, count, exponent, ratio, engine)


def _sharded_total(branch, n: int, threads: int) -> int:
    """1 (empty set) + the branch counts over each minimum element."""
    firsts = list(range(1, n + 1))
    if threads <= 1 or n == 0:
        parts = [branch(n, f) for f in firsts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda f: branch(n, f), firsts))
    return 1 + sum(parts)  # ordered merge: deterministic for any thread count


def count_sum_free(n: int, threads: int = 1,
                   engine: str = "dfs") -> CountRecord:
    """Exact number of sum-free subsets of [n], including the empty set."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if engine == "naive":
        if n > _cap(NAIVE_CAP_SF1):
            raise CapExceededError(f"naive engine capped at n={_cap(NAIVE_CAP_SF1)}")
        count = kernels.count_sum_free_naive(n)
    elif engine == "dfs":
        if n > _cap(DFS_CAP_SF1):
            raise CapExceededError(f"dfs engine capped at n={_cap(DFS_CAP_SF1)}")
        count = _sharded_total(kernels.count_sum_free_branch, n, threads)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return CountRecord.build(n, "sf1", count, engine)


def count_two_wise_sum_free(n: int, threads: int = 1,
                            engine: str = "dfs") -> CountRecord:
    """Exact number of subsets of [n] splittable into two sum-free parts."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if engine == "naive":
        if n > _cap(NAIVE_CAP_SF2):
            raise CapExceededError(f"naive engine capped at n={_cap(NAIVE_CAP_SF2)}")
        count = kernels.count_two_wise_naive(n)
    elif engine == "dfs":
        if n > _cap(DFS_CAP_SF2):
            raise CapExceededError(f"dfs engine capped at n={_cap(DFS_CAP_SF2)}")
        count = _sharded_total(kernels.count_two_wise_branch, n, threads)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return CountRecord.build(n, "sf2", count, engine)


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    parameters: dict = field(hash=False)
    bound_value: float = math.inf
    exact_value: Optional[int] = None
    satisfied: Optional[bool] = None  # None = "n/a": nothing exact to compare


def entropy(x: float) -> float:
    """Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x); H(0)=H(1)=0."""
    if not -FLOAT_TOL <= x <= 1 + FLOAT_TOL:
        raise ValueError("entropy domain is [0, 1]")
    x = min(max(x, 0.0), 1.0)
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def entropy_binomial_check(n: int, k: int, alpha: float) -> BoundReport:
    """C(n,k) <= 2^(H(k/n)n) and sum_{i<=alpha*n} C(n,i) <= 2^(H(alpha)n).

    Exact binomials; the comparison happens on log2 scale with a 1e-9
    tolerance band in the bound's favor.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if not 0 <= alpha <= 0.5 + FLOAT_TOL:
        raise ValueError("alpha must lie in [0, 1/2]")
    binom = math.comb(n, k)
    point_exp = entropy(k / n) * n if n else 0.0
    point_ok = math.log2(binom) <= point_exp + FLOAT_TOL
    tail = sum(math.comb(n, i) for i in range(math.floor(alpha * n + FLOAT_TOL) + 1))
    tail_exp = entropy(alpha) * n
    tail_ok = math.log2(tail) <= tail_exp + FLOAT_TOL
    return BoundReport(
        "entropy_binomial",
        {"n": n, "k": k, "alpha": alpha, "point_exponent": point_exp,
         "tail_exact": tail, "tail_exponent": tail_exp,
         "point_ok": point_ok, "tail_ok": tail_ok},
        bound_value=2.0 ** point_exp, exact_value=binom,
        satisfied=point_ok and tail_ok)


def restricted_partition_count(k: int, parts: int) -> int:
    """Partitions of k into `parts` distinct positive integers (exact DP)."""
    if parts < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    # p(k, l) = p(k - l, l) + p(k - l, l - 1): subtract 1 from every part.
    table = [[0] * (parts + 1) for _ in range(k + 1)]
    table[0][0] = 1
    for kk in range(1, k + 1):
        for ll in range(1, parts + 1):
            if kk >= ll:
                table[kk][ll] = table[kk - ll][ll] + table[kk - ll][ll - 1]
    return table[k][parts]


def restricted_partitions(k: int, l: int) -> BoundReport:
    """Exact distinct-part partition count versus the bound (e^2 k / l^2)^l."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    exact = restricted_partition_count(k, l)
    bound = (math.e ** 2 * k / l ** 2) ** l
    return BoundReport("restricted_partitions", {"k": k, "l": l},
                       bound_value=bound, exact_value=exact,
                       satisfied=exact <= bound * (1 + FLOAT_TOL))


def count_small_sumset_sets(d: int, s: int, r: float) -> int:
    """|{S in [1, D] : |S| = s, |S+S| <= R*s}| by brute force (tiny domains)."""
    count = 0
    for combo in combinations(range(1, d + 1), s):
        a = IntSet.of(combo, universe_bound=d)
        if len(sumset(a, a)) <= r * s + FLOAT_TOL:
            count += 1
    return count


def green_morris_bound(delta: float, r: float, s: int, d: int,
                       brute: bool = False) -> BoundReport:
    """Bound 2^(delta*s) * C(floor(R*s/2), s) * D^floor(R+delta) on the
    number of s-subsets of [D] with sumset at most R*s.

    The exact comparison is advisory: the bound only holds for s beyond an
    unspecified threshold s0(delta, R).
    """
    if delta <= 0 or r <= 0 or s < 1 or d < 1:
        raise ValueError("need delta > 0, R > 0, s >= 1, D >= 1")
    upper = math.floor(r * s / 2 + FLOAT_TOL)
    bound = 2.0 ** (delta * s) * math.comb(upper, s) * d ** math.floor(delta + r)
    exact = count_small_sumset_sets(d, s, r) if brute else None
    satisfied = None if exact is None else exact <= bound * (1 + FLOAT_TOL)
    return BoundReport(
        "green_morris",
        {"delta": delta, "R": r, "s": s, "D": d,
         "binomial_upper_index": upper, "advisory": True},
        bound_value=bound, exact_value=exact, satisfied=satisfied)


def janson_quantities(u_sets: Sequence[frozenset],
                      gamma_size: int) -> tuple[Fraction, Fraction]:
    """(mu, Delta) for a family of subsets of a |Gamma|-element ground set.

    mu = sum (1/2)^|Ui|; Delta = sum over ordered overlapping pairs i != j
    of (1/2)^|Ui u Uj|.
    """
    gamma = set(range(1, gamma_size + 1))
    sets = [frozenset(u) for u in u_sets]
    for u in sets:
        if not u <= gamma:
            raise ValueError("every U_i must be a subset of the ground set")
    half = Fraction(1, 2)
    mu = sum((half ** len(u) for u in sets), Fraction(0))
    delta = Fraction(0)
    for i, ui in enumerate(sets):
        for j, uj in enumerate(sets):
            if i != j and ui & uj:
                delta += half ** len(ui | uj)
    return mu, delta


def janson_count_exact(u_sets: Sequence[frozenset], gamma_size: int,
                       threshold: Fraction) -> int:
    """Subsets of the ground set containing at most `threshold` of the U_i."""
    sets = [frozenset(u) for u in u_sets]
    masks = [sum(1 << (e - 1) for e in u) for u in sets]
    count = 0
    for w in range(1 << gamma_size):
        hits = sum(1 for m in masks if w & m == m)
        if Fraction(hits) <= threshold:
            count += 1
    return count


def janson_bound(u_sets: Sequence[Iterable[int]], gamma_size: int,
                 brute: bool = False) -> BoundReport:
    """Lower-tail bound: at most exp(-mu^2/(8mu+8Delta)) * 2^|Gamma| subsets
    of Gamma contain at most mu/2 of the sets U_i."""
    sets = [frozenset(u) for u in u_sets]
    mu, delta = janson_quantities(sets, gamma_size)
    if mu == 0:
        bound = float(2 ** gamma_size)  # empty family: the bound is vacuous
    else:
        exponent = -float(mu * mu / (8 * mu + 8 * delta))
        bound = math.exp(exponent) * 2 ** gamma_size
    exact = None
    if brute:
        if gamma_size > 20:
            raise CapExceededError("brute-force comparison capped at |Gamma|=20")
        exact = janson_count_exact(sets, gamma_size, mu / 2)
    satisfied = None if exact is None else exact <= bound * (1 + FLOAT_TOL)
    return BoundReport(
        "janson",
        {"gamma_size": gamma_size, "set_count": len(sets),
         "mu": str(mu), "delta": str(delta)},
        bound_value=bound, exact_value=exact, satisfied=satisfied)


@dataclass(frozen=True)
class ForbiddenGraph:
    n: int
    s: tuple[int, ...]
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    edge_count: int
    max_degree: int
    degree_bound: int  # 2|S|
    mu: Fraction
    delta_upper: Fraction  # k|S|/2

    @property
    def degree_ok(self) -> bool:
        return self.max_degree <= self.degree_bound


def forbidden_graph(s: IntSet, n: int) -> ForbiddenGraph:
    """Difference graph on the second interval (n/5, 2n/5].

    Vertices are the integers in (n/5, 2n/5]; for each shift s in S, every
    pair {x, x+s} inside the vertex range is an edge.  A set avoiding these
    edges avoids realizing any s in S as an internal difference.
    """
    lo = math.floor(n / 5 + FLOAT_TOL) + 1
    hi = math.floor(2 * n / 5 + FLOAT_TOL)
    vertices = tuple(range(lo, hi + 1))
    edges = []
    for shift in s:
        if shift < 1:
            continue
        for x in vertices:
            if x + shift <= hi:
                edges.append((x, x + shift))
    edges = tuple(sorted(set(edges)))
    degree: dict[int, int] = {}
    for x, y in edges:
        degree[x] = degree.get(x, 0) + 1
        degree[y] = degree.get(y, 0) + 1
    k = len(edges)
    return ForbiddenGraph(n, tuple(s), vertices, edges, k,
                          max(degree.values(), default=0), 2 * len(s),
                          Fraction(k, 4), Fraction(k * len(s), 2))
