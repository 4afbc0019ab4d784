"""Exhaustive finite verifiers for the additive lemmas.

Each verifier sweeps a small, explicitly described domain, checks the
inequality or containment on every instance, and reports violations as
re-checkable witnesses.  Domains are normalized by translation (min = 0)
where the statement is translation invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .intset import (IntSet, SignedSet, diff_gcd, difference_set, k_fold_sumset,
                     positive_part, stats, sumset)
from .schur import is_sum_free


@dataclass(frozen=True)
class VerificationReport:
    name: str
    domain: dict = field(hash=False)
    instances_checked: int = 0
    violations: tuple = ()
    slack_histogram: dict = field(default_factory=dict, hash=False)
    notes: dict = field(default_factory=dict, hash=False)

    @property
    def ok(self) -> bool:
        return not self.violations


def _bump(hist: dict, slack) -> None:
    hist[slack] = hist.get(slack, 0) + 1


def _count_in(mask: int, lo: int, hi: int) -> int:
    """|A cap [lo, hi]| for a bitmask set."""
    if hi < lo:
        return 0
    lo = max(lo, 0)
    window = ((1 << (hi - lo + 1)) - 1) << lo
    return (mask & window).bit_count()


def verify_long_interval(max_n: int) -> VerificationReport:
    """Interval-density bounds satisfied by every sum-free set.

    For sum-free A in [max_n] and any m in A:
    (i)  |A cap ([u,v] u [u+m,v+m])| <= v-u+1;
    (ii) |A cap [u, u+2m-1]| <= m;
    (iii) 2|A cap [u,v]| <= v-u+m+1.
    """
    if max_n > 20:
        raise ValueError("exhaustive mode capped at max_n=20")
    from .structure import _iter_sum_free_masks
    instances = 0
    violations = []
    hist: dict = {}
    for mask in _iter_sum_free_masks(max_n):
        elems = IntSet(mask, universe_bound=max_n)
        for m in elems:
            for u in range(1, max_n + 1):
                # (ii)
                instances += 1
                lhs = _count_in(mask, u, u + 2 * m - 1)
                if lhs > m:
                    violations.append(("ii", tuple(elems), m, u, lhs, m))
                _bump(hist, m - lhs)
                for v in range(u, max_n + 1):
                    # (i)
                    instances += 1
                    width = (1 << (v - u + 1)) - 1
                    union = (width << u) | (width << (u + m))
                    lhs = (mask & union).bit_count()
                    if lhs > v - u + 1:
                        violations.append(("i", tuple(elems), m, u, v, lhs))
                    # (iii)
                    instances += 1
                    lhs3 = _count_in(mask, u, v)
                    if 2 * lhs3 > v - u + m + 1:
                        violations.append(("iii", tuple(elems), m, u, v, lhs3))
    return VerificationReport("long_interval", {"max_n": max_n}, instances,
                              tuple(violations), hist)


def _gap_bounded_b_sets(max_span: int, k: int):
    """Non-empty B in [0, max_span] with min(B)=0 and consecutive gaps <= k."""
    yield (0,)
    stack = [(0,)]
    while stack:
        b = stack.pop()
        last = b[-1]
        for nxt in range(last + 1, min(last + k, max_span) + 1):
            nb = b + (nxt,)
            yield nb
            stack.append(nb)


def verify_summation(max_k: int, max_span: int) -> VerificationReport:
    """Near-full sumset growth: |A+B| >= (1-4*eps)(k + span(B)).

    A in [0, k-1] with |A| >= (1-eps)k, B with gaps <= k; eps = 1 - |A|/k.
    Two verdicts are recorded: the bound as stated ("strict") and with one
    unit of slack.  The strict reading fails by exactly one on the eps=0
    boundary (A a full interval), where A+B is the interval
    [b_1, b_l + k - 1] of size k + span(B) - 1; see the package notes.
    """
    instances = 0
    violations = []  # slack-1 failures: genuine violations
    strict_failures = []
    hist: dict = {}
    for k in range(1, max_k + 1):
        b_sets = list(_gap_bounded_b_sets(max_span, k))
        for amask in range(0, 1 << k):
            a = IntSet(amask, universe_bound=max(k, 1))
            eps = Fraction(k - len(a), k)
            rhs_coeff = 1 - 4 * eps
            for b_elems in b_sets:
                instances += 1
                span_b = b_elems[-1] - b_elems[0] + 1
                rhs = rhs_coeff * (k + span_b)
                if rhs <= 0:
                    _bump(hist, "trivial")
                    continue
                b = IntSet.of(b_elems, universe_bound=max(max_span, 1))
                lhs = len(sumset(a, b))
                if Fraction(lhs) < rhs:
                    strict_failures.append(
                        (tuple(a), tuple(b), k, str(eps), lhs, float(rhs)))
                if Fraction(lhs) < rhs - 1:
                    violations.append(
                        (tuple(a), tuple(b), k, str(eps), lhs, float(rhs)))
                _bump(hist, math.floor(Fraction(lhs) - rhs))
    boundary_only = all(f[3] == "0" for f in strict_failures)
    return VerificationReport(
        "summation", {"max_k": max_k, "max_span": max_span}, instances,
        tuple(violations), hist,
        notes={"strict_failures": len(strict_failures),
               "strict_failures_all_on_eps0_boundary": boundary_only})


def verify_bootstrap(max_k: int) -> VerificationReport:
    """Dense sets have interval-filling difference sets and sumsets.

    For A in [0, k]: (i) A-A contains [1, 2|A| - span(A) - 1];
    (ii) A+A contains [2k - 2|A| + 2, 2|A| - 2].  Empty target intervals
    pass vacuously.
    """
    if max_k > 18:
        raise ValueError("exhaustive mode capped at max_k=18")
    instances = 0
    violations = []
    hist: dict = {}
    for amask in range(1, 1 << (max_k + 1)):
        a = IntSet(amask, universe_bound=max_k)
        size = len(a)
        span = a.max() - a.min() + 1
        diff = difference_set(a, a)
        # (i)
        instances += 1
        hi = 2 * size - span - 1
        missing = [t for t in range(1, hi + 1) if t not in diff]
        if missing:
            violations.append(("i", tuple(a), missing))
        _bump(hist, ("i", max(hi, 0)))
        # (ii) for every k with A in [0, k]
        two_a = sumset(a, a)
        for k in range(a.max(), max_k + 1):
            instances += 1
            lo, hi2 = 2 * k - 2 * size + 2, 2 * size - 2
            missing = [t for t in range(lo, hi2 + 1) if t not in two_a]
            if missing:
                violations.append(("ii", tuple(a), k, missing))
    return VerificationReport("bootstrap", {"max_k": max_k}, instances,
                              tuple(violations), hist)


def verify_lev_smeliansky_diff(max_span: int) -> VerificationReport:
    """Difference-set growth for primitive sets (d(A) = 1).

    |(A-A)_+| >= min{(|A| + span(A) - 2)/2, (3/2)|A| - 2}, compared in
    exact rationals.
    """
    if max_span > 16:
        raise ValueError("exhaustive mode capped at max_span=16")
    instances = 0
    violations = []
    hist: dict = {}
    for amask in range(1, 1 << (max_span + 1)):
        if not amask & 1:  # normalize: min(A) = 0
            continue
        a = IntSet(amask, universe_bound=max_span)
        if len(a) < 2 or diff_gcd(a) != 1:
            continue
        instances += 1
        lhs = len(positive_part(difference_set(a, a)))
        span = a.max() - a.min() + 1
        rhs = min(Fraction(len(a) + span - 2, 2), Fraction(3 * len(a), 2) - 2)
        if Fraction(lhs) < rhs:
            violations.append((tuple(a), lhs, str(rhs)))
        _bump(hist, math.floor(Fraction(lhs) - rhs))
    return VerificationReport("lev_smeliansky_diff", {"max_span": max_span},
                              instances, tuple(violations), hist)


@dataclass(frozen=True)
class APCover:
    step: int
    progressions: tuple[tuple[int, ...], ...]  # explicit element tuples

    @property
    def total_length(self) -> int:
        return sum(len(p) for p in self.progressions)

    def covers(self, a: IntSet) -> bool:
        cover = set()
        for p in self.progressions:
            cover.update(p)
        return set(a) <= cover


def _ap(start: int, step: int, length: int) -> tuple[int, ...]:
    return tuple(start + i * step for i in range(length))


def ap_cover_check(a: IntSet, count: int,
                   max_total_length: int) -> Optional[APCover]:
    """Smallest cover of A by `count` same-step arithmetic progressions.

    Returns an explicit cover of total length <= max_total_length, or None
    when no such cover exists.  Exact over all steps d <= span(A).
    """
    if not a:
        raise ValueError("A must be non-empty")
    if count not in (1, 2):
        raise ValueError("count must be 1 or 2")
    elems = list(a)
    if len(elems) <= count:
        if len(elems) > max_total_length:
            return None
        return APCover(1, tuple((e,) for e in elems))
    lo = a.min()
    span = a.max() - lo
    best: Optional[APCover] = None
    for d in range(1, span + 1):
        classes: dict[int, list[int]] = {}
        for e in elems:
            classes.setdefault(e % d, []).append(e)
        if len(classes) > count:
            continue
        if count == 1:
            (vals,) = classes.values()
            length = (vals[-1] - vals[0]) // d + 1
            if length <= max_total_length and (
                    best is None or length < best.total_length):
                best = APCover(d, (_ap(vals[0], d, length),))
            continue
        if len(classes) == 2:
            progs = []
            total = 0
            for vals in classes.values():
                length = (vals[-1] - vals[0]) // d + 1
                total += length
                progs.append(_ap(vals[0], d, length))
            if total <= max_total_length and (
                    best is None or total < best.total_length):
                best = APCover(d, tuple(progs))
        else:
            (vals,) = classes.values()
            positions = [(v - vals[0]) // d for v in vals]
            full = positions[-1] + 1
            # split the single class at its largest gap
            cut = max(range(1, len(positions)),
                      key=lambda i: positions[i] - positions[i - 1])
            gap = positions[cut] - positions[cut - 1]
            total = full - (gap - 1)
            if gap > 1 and total < full:
                p1 = _ap(vals[0], d, positions[cut - 1] + 1)
                p2 = _ap(vals[cut], d, positions[-1] - positions[cut] + 1)
                progs = (p1, p2)
            else:
                total = full
                progs = (_ap(vals[0], d, full), ())
            if total <= max_total_length and (
                    best is None or total < best.total_length):
                best = APCover(d, tuple(p for p in progs if p))
    if best is not None:
        assert best.covers(a) and best.total_length <= max_total_length
    return best


def ap_cover_check_naive(a: IntSet, count: int,
                         max_total_length: int) -> Optional[APCover]:
    """Brute-force reference for ap_cover_check (endpoint anchors in A)."""
    if not a:
        raise ValueError("A must be non-empty")
    elems = list(a)
    if len(elems) <= count:
        if len(elems) > max_total_length:
            return None
        return APCover(1, tuple((e,) for e in elems))
    span = a.max() - a.min()
    target = set(elems)
    for d in range(1, span + 1):
        if count == 1:
            for s in elems:
                for e in elems:
                    if e < s or (e - s) % d:
                        continue
                    length = (e - s) // d + 1
                    if length > max_total_length:
                        continue
                    if target <= set(_ap(s, d, length)):
                        return APCover(d, (_ap(s, d, length),))
        else:
            for s1 in elems:
                for e1 in elems:
                    if e1 < s1 or (e1 - s1) % d:
                        continue
                    p1 = _ap(s1, d, (e1 - s1) // d + 1)
                    if len(p1) > max_total_length:
                        continue
                    rest = target - set(p1)
                    if not rest:
                        if len(p1) <= max_total_length:
                            return APCover(d, (p1,))
                        continue
                    s2, e2 = min(rest), max(rest)
                    if (e2 - s2) % d or any((r - s2) % d for r in rest):
                        continue
                    p2 = _ap(s2, d, (e2 - s2) // d + 1)
                    if len(p1) + len(p2) <= max_total_length and rest <= set(p2):
                        return APCover(d, (p1, p2))
    return None


@dataclass(frozen=True)
class Example42Record:
    x: int
    y: int
    a: tuple[int, ...]
    size: int
    diff_size: int
    r: int
    conclusion_i: Optional[bool]
    conclusion_ii: Optional[bool]


def example42(x: int, y: int) -> Example42Record:
    """The boundary family A = {0, y, 2y} + [0, x-1].

    |A| = 3x and |A-A| = 10x - 5, so the small-difference parameter is
    r = x - 2 = |A|/3 - 2: exactly on the closed end of the conjectured
    range.  For x >= 3 both structural conclusions (one AP of length
    2|A| - 1 + 2r; two same-step APs of total length |A| + r) fail.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if y < 4 * x:
        raise ValueError("y must be at least 4x")
    a = IntSet.of((base + i for base in (0, y, 2 * y) for i in range(x)),
                  universe_bound=2 * y + x)
    size = len(a)
    assert size == 3 * x
    diff_size = len(difference_set(a, a))
    r = diff_size - 3 * size + 3
    if x >= 3:
        ci = ap_cover_check(a, 1, 2 * size - 1 + 2 * r) is not None
        cii = ap_cover_check(a, 2, size + r) is not None
    else:
        ci = cii = None
    return Example42Record(x, y, tuple(a), size, diff_size, r, ci, cii)


@dataclass(frozen=True)
class SmallDifferenceSearch:
    max_size: int
    max_span: int
    sets_enumerated: int
    in_range: int
    candidates: tuple  # sets in the open range failing both conclusions
    boundary_witnesses: tuple  # r == |A|/3 - 2 with both conclusions failing


def conjecture41_search(max_size: int = 8,
                        max_span: int = 24) -> SmallDifferenceSearch:
    """Search for small-difference sets escaping both AP structures.

    Enumerates A with min(A)=0, d(A)=1, |A| <= max_size inside [0, max_span];
    with r = |A-A| - 3|A| + 3, sets in the open range 0 < r < |A|/3 - 2 that
    fail both conclusions are candidate counterexamples (the conjectured
    threshold K is unknown, so candidates are labeled, never concluded).
    Sets sitting exactly at r = |A|/3 - 2 and failing both conclusions are
    logged as boundary witnesses.
    """
    enumerated = 0
    in_range = 0
    candidates = []
    boundary = []
    for size in range(2, max_size + 1):
        for rest in combinations(range(1, max_span + 1), size - 1):
            a = IntSet.of((0,) + rest, universe_bound=max_span)
            if diff_gcd(a) != 1:
                continue
            enumerated += 1
            diff_size = len(difference_set(a, a))
            r = diff_size - 3 * size + 3
            edge = Fraction(size, 3) - 2
            if 0 < r and Fraction(r) < edge:
                in_range += 1
                if (ap_cover_check(a, 1, 2 * size - 1 + 2 * r) is None
                        and ap_cover_check(a, 2, size + r) is None):
                    candidates.append((tuple(a), r))
            elif r > 0 and Fraction(r) == edge:
                if (ap_cover_check(a, 1, 2 * size - 1 + 2 * r) is None
                        and ap_cover_check(a, 2, size + r) is None):
                    boundary.append((tuple(a), r))
    return SmallDifferenceSearch(max_size, max_span, enumerated, in_range,
                                 tuple(candidates), tuple(boundary))


def plunnecke_check(s: IntSet, k_max: int) -> VerificationReport:
    """Iterated sumset growth: |kS| <= (|S+S|/|S|)^k * |S|, exact rationals."""
    if not s:
        raise ValueError("S must be non-empty")
    if k_max > 5:
        raise ValueError("k_max capped at 5")
    ratio = Fraction(len(sumset(s, s)), len(s))
    instances = 0
    violations = []
    hist: dict = {}
    for k in range(1, k_max + 1):
        instances += 1
        lhs = len(k_fold_sumset(s, k))
        rhs = ratio ** k * len(s)
        if Fraction(lhs) > rhs:
            violations.append((tuple(s), k, lhs, str(rhs)))
        _bump(hist, k)
    return VerificationReport("plunnecke", {"set": tuple(s), "k_max": k_max},
                              instances, tuple(violations), hist,
                              notes={"ratio": str(ratio)})


def plunnecke_sweep(max_elem: int, k_max: int) -> VerificationReport:
    """plunnecke_check over every non-empty S in [0, max_elem]."""
    instances = 0
    violations = []
    for mask in range(1, 1 << (max_elem + 1)):
        rep = plunnecke_check(IntSet(mask, universe_bound=max_elem), k_max)
        instances += rep.instances_checked
        violations.extend(rep.violations)
    return VerificationReport("plunnecke_sweep",
                              {"max_elem": max_elem, "k_max": k_max},
                              instances, tuple(violations), {})
