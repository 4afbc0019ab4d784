"""Structural classifiers for large sum-free sets.

A large sum-free subset of [n] is (conjecturally up to constants, provably at
scale) one of: all odd, one of the two extremal mod-5 classes, top-heavy
(min >= size), or trapped in the two-interval window around (n/5, 2n/5] and
(4n/5, n].  This module turns those alternatives into decision procedures,
plus exhaustive scans over all sum-free subsets at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .intset import IntSet, residue_class_set
from .schur import is_sum_free

# Outward tolerance for testing integer membership in real-endpoint windows.
ENDPOINT_TOL = 1e-9

SCAN_CAP = 28

ALTERNATIVES = ("i", "ii", "iii", "iv", "v")


class NotSumFreeError(ValueError):
    """Raised when a classifier is handed a non-sum-free set."""


def f14(n: int) -> IntSet:
    """Elements of [n] congruent to 1 or 4 mod 5."""
    return residue_class_set(n, 5, {1, 4})


def f23(n: int) -> IntSet:
    """Elements of [n] congruent to 2 or 3 mod 5."""
    return residue_class_set(n, 5, {2, 3})


def window_interval_pair(n: int) -> tuple[IntSet, IntSet]:
    """I1 = (n/5, 2n/5] u (4n/5, n] and I2 = (2n/5, 4n/5] as integer sets."""
    i1 = IntSet.of(
        (a for a in range(1, n + 1)
         if (n / 5 + ENDPOINT_TOL < a <= 2 * n / 5 + ENDPOINT_TOL)
         or (4 * n / 5 + ENDPOINT_TOL < a)),
        universe_bound=max(n, 1))
    i2 = IntSet.of(
        (a for a in range(1, n + 1)
         if 2 * n / 5 + ENDPOINT_TOL < a <= 4 * n / 5 + ENDPOINT_TOL),
        universe_bound=max(n, 1))
    return i1, i2


def _in_closed(a: int, lo: float, hi: float) -> bool:
    return lo - ENDPOINT_TOL <= a <= hi + ENDPOINT_TOL


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    eta: float
    satisfied: frozenset[str]
    interval_slack: int  # realized window half-width term, ceil(200*sqrt(eta)*n)
    vacuous_v: bool  # the two-interval window covers all of [n]
    trivial: bool = False  # empty input


def _window_membership(a: int, n: int, slack: float) -> bool:
    """Is a inside [(1/5 - s)n, (2/5 + s)n] u [(4/5 - s)n, n]?"""
    return (_in_closed(a, (1 / 5 - slack) * n, (2 / 5 + slack) * n)
            or _in_closed(a, (4 / 5 - slack) * n, n))


def classify(a: IntSet, n: int, eta: float) -> ClassificationReport:
    """Which of the five structural alternatives hold for a sum-free A in [n].

    (i) all odd; (ii) all = 1,4 mod 5; (iii) all = 2,3 mod 5;
    (iv) min(A) >= |A|; (v) A inside the eta-window around the extremal
    two-interval family.
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    if a and a.max() > n:
        raise ValueError("A is not a subset of [n]")
    if not is_sum_free(a):
        raise NotSumFreeError("classify requires a sum-free input")
    slack = 200 * math.sqrt(eta)
    vacuous = slack >= 1 / 5
    interval_slack = math.ceil(slack * n)
    if not a:
        return ClassificationReport(n, eta, frozenset(ALTERNATIVES),
                                    interval_slack, vacuous, trivial=True)
    sat = set()
    if all(e % 2 == 1 for e in a):
        sat.add("i")
    if a <= f14(n):
        sat.add("ii")
    if a <= f23(n):
        sat.add("iii")
    if a.min() >= len(a):
        sat.add("iv")
    if all(_window_membership(e, n, slack) for e in a):
        sat.add("v")
    return ClassificationReport(n, eta, frozenset(sat), interval_slack, vacuous)


@dataclass(frozen=True)
class FreimanVerdict:
    n: int
    premise_met: bool
    all_odd: Optional[bool]  # None when the premise fails
    min_at_least_size: Optional[bool]
    satisfied: frozenset[str]


def freiman_check(a: IntSet, n: int) -> FreimanVerdict:
    """For |A| >= 5n/12 + 2: is A all odd, or is min(A) >= |A|?"""
    if a and a.max() > n:
        raise ValueError("A is not a subset of [n]")
    if not is_sum_free(a):
        raise NotSumFreeError("freiman_check requires a sum-free input")
    premise = Fraction(len(a)) >= Fraction(5 * n, 12) + 2
    if not premise:
        return FreimanVerdict(n, False, None, None, frozenset())
    odd = all(e % 2 == 1 for e in a)
    top = (not a) or a.min() >= len(a)
    sat = {name for name, ok in (("i", odd), ("ii", top)) if ok}
    return FreimanVerdict(n, True, odd, top, frozenset(sat))


@dataclass(frozen=True)
class DFSTVerdict:
    n: int
    x: float
    k_slack: int
    premise_met: bool
    satisfied: frozenset[str]


def dfst_check(a: IntSet, n: int, x: float, k_slack: int) -> DFSTVerdict:
    """Five-alternative check with an absolute window slack K.

    Alternative (v) here reads: A inside [n/5 - K, 2n/5 + K] u [4n/5 - K, n].
    """
    if a and a.max() > n:
        raise ValueError("A is not a subset of [n]")
    if not is_sum_free(a):
        raise NotSumFreeError("dfst_check requires a sum-free input")
    premise = len(a) >= 2 * n / 5 - x - ENDPOINT_TOL
    if not premise:
        return DFSTVerdict(n, x, k_slack, False, frozenset())
    if not a:
        return DFSTVerdict(n, x, k_slack, True, frozenset(ALTERNATIVES))
    sat = set()
    if all(e % 2 == 1 for e in a):
        sat.add("i")
    if a <= f14(n):
        sat.add("ii")
    if a <= f23(n):
        sat.add("iii")
    if a.min() >= len(a):
        sat.add("iv")
    if all(_in_closed(e, n / 5 - k_slack, 2 * n / 5 + k_slack)
           or _in_closed(e, 4 * n / 5 - k_slack, n) for e in a):
        sat.add("v")
    return DFSTVerdict(n, x, k_slack, True, frozenset(sat))


def _pair_defect(c1: IntSet, c2: IntSet, t1: IntSet, t2: IntSet) -> int:
    """min over the two assignments of |C1 \\ T1| + |C2 \\ T2|."""
    d_straight = len(c1 - t1) + len(c2 - t2)
    d_swapped = len(c2 - t1) + len(c1 - t2)
    return min(d_straight, d_swapped)


@dataclass(frozen=True)
class StabilityReport:
    n: int
    eta: float
    premise_met: bool
    defect_a: int
    defect_b: int
    threshold_a: float  # 14 * eta * n
    threshold_b: float  # 2424 * sqrt(eta) * n
    verdict: frozenset[str]  # subset of {"i", "ii"}; empty means neither


def stability_classify(c1: IntSet, c2: IntSet, n: int,
                       eta: float) -> StabilityReport:
    """Near-extremal pair structure: mod-5 classes or the interval pair.

    For sum-free C1, C2 with |C1 u C2| >= (4/5 - eta)n, one of:
    (i) defect against (F14, F23) is at most 14*eta*n;
    (ii) defect against (I1, I2) is at most 2424*sqrt(eta)*n.
    Defects are minimized over the two assignments of (C1, C2).
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    for c in (c1, c2):
        if c and c.max() > n:
            raise ValueError("inputs must be subsets of [n]")
        if not is_sum_free(c):
            raise NotSumFreeError("stability_classify requires sum-free inputs")
    premise = len(c1 | c2) >= (4 / 5 - eta) * n - ENDPOINT_TOL
    defect_a = _pair_defect(c1, c2, f14(n), f23(n))
    i1, i2 = window_interval_pair(n)
    defect_b = _pair_defect(c1, c2, i1, i2)
    ta = 14 * eta * n
    tb = 2424 * math.sqrt(eta) * n
    verdict = set()
    if premise:
        if defect_a <= ta + ENDPOINT_TOL:
            verdict.add("i")
        if defect_b <= tb + ENDPOINT_TOL:
            verdict.add("ii")
    return StabilityReport(n, eta, premise, defect_a, defect_b, ta, tb,
                           frozenset(verdict))


@dataclass(frozen=True)
class TypeVerdict:
    n: int
    delta: float
    defect_a: int
    defect_b: int
    verdict: str  # "a", "b", "both" or "neither"


def type_ab_classify(a1: IntSet, a2: IntSet, n: int,
                     delta: float) -> TypeVerdict:
    """Type (a) / type (b) split for a disjoint sum-free pair.

    (a): defect against (F14, F23) <= delta*n; (b): defect against (I1, I2)
    <= delta*n; both minimized over the two assignments of (A1, A2).
    """
    if a1 & a2:
        raise ValueError("A1 and A2 must be disjoint")
    for c in (a1, a2):
        if c and c.max() > n:
            raise ValueError("inputs must be subsets of [n]")
        if not is_sum_free(c):
            raise NotSumFreeError("type_ab_classify requires sum-free inputs")
    defect_a = _pair_defect(a1, a2, f14(n), f23(n))
    i1, i2 = window_interval_pair(n)
    defect_b = _pair_defect(a1, a2, i1, i2)
    is_a = defect_a <= delta * n + ENDPOINT_TOL
    is_b = defect_b <= delta * n + ENDPOINT_TOL
    verdict = {(True, True): "both", (True, False): "a",
               (False, True): "b", (False, False): "neither"}[(is_a, is_b)]
    return TypeVerdict(n, delta, defect_a, defect_b, verdict)


def _iter_sum_free_masks(n: int):
    """Yield the mask of every non-empty sum-free subset of [n] (DFS)."""
    stack = [(f + 1, 1 << f, (1 << f) << f) for f in range(n, 0, -1)]
    while stack:
        start, s, sums = stack.pop()
        yield s
        for f in range(start, n + 1):
            if not (sums >> f) & 1:
                ns = s | (1 << f)
                stack.append((f + 1, ns, sums | (ns << f)))


@dataclass(frozen=True)
class ScanReport:
    n: int
    mode: str  # "freiman" or "full"
    eta: Optional[float]
    enumerated: int  # sum-free subsets of [n], including the empty set
    premise_count: int
    per_alternative: dict[str, int] = field(hash=False)
    violators: tuple[tuple[int, ...], ...] = ()
    note: str = ""


def structure_scan(n: int, eta: Optional[float] = None,
                   mode: str = "freiman", cap: int = SCAN_CAP) -> ScanReport:
    """Classify every sum-free subset of [n] that meets the size premise.

    mode="freiman": premise |A| >= 5n/12 + 2, alternatives (i)/(ii);
    mode="full": premise |A| >= (2/5 - eta)n, alternatives (i)-(v).
    Violators (sets satisfying no alternative) are reported, never treated as
    refutations: at finite n they live outside the proven regime.
    """
    if mode not in ("freiman", "full"):
        raise ValueError(f"unknown scan mode {mode!r}")
    if mode == "full" and (eta is None or eta <= 0):
        raise ValueError("full-mode scans need a positive eta")
    if n > cap:
        raise ValueError(f"n={n} exceeds the exhaustive scan cap {cap}")
    alternatives = ("i", "ii") if mode == "freiman" else ALTERNATIVES
    tallies = {alt: 0 for alt in alternatives}
    violators = []
    enumerated = 1  # the empty set
    premise_count = 0
    if mode == "freiman":
        threshold = Fraction(5 * n, 12) + 2
    for mask in _iter_sum_free_masks(n):
        enumerated += 1
        size = mask.bit_count()
        if mode == "freiman":
            if Fraction(size) < threshold:
                continue
            a = IntSet(mask, universe_bound=max(n, 1))
            sat = freiman_check(a, n).satisfied
        else:
            if size < (2 / 5 - eta) * n - ENDPOINT_TOL:
                continue
            a = IntSet(mask, universe_bound=max(n, 1))
            sat = classify(a, n, eta).satisfied
        premise_count += 1
        for alt in sat:
            tallies[alt] += 1
        if not sat:
            violators.append(tuple(a))
    note = "" if not violators else "violators are outside the proven regime"
    if premise_count == 0:
        note = "no sets meet premise"
    return ScanReport(n, mode, eta, enumerated, premise_count, tallies,
                      tuple(sorted(violators)), note)
