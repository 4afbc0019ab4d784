"""Exact algebra over finite sets of non-negative integers.

Sets are immutable bit-vectors keyed by value (a Python int mask), which
makes sumsets shift-or loops and keeps every downstream enumeration exact.
Difference sets live on a signed range and are stored as a shifted mask with
a recorded offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

DEFAULT_UNIVERSE_BOUND = 1 << 16


class EmptySetError(ValueError):
    """Raised for statistics that are undefined on the empty set."""


@dataclass(frozen=True)
class IntSet:
    """A finite set of integers in [0, universe_bound], stored as a bitmask."""

    mask: int = 0
    universe_bound: int = DEFAULT_UNIVERSE_BOUND

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("negative mask")
        if self.mask.bit_length() - 1 > self.universe_bound:
            raise ValueError("element exceeds universe_bound")

    @classmethod
    def of(cls, elements: Iterable[int], universe_bound: int | None = None) -> "IntSet":
        mask = 0
        top = 0
        for e in elements:
            if e < 0:
                raise ValueError(f"negative element {e}")
            mask |= 1 << e
            top = max(top, e)
        if universe_bound is None:
            universe_bound = max(top, DEFAULT_UNIVERSE_BOUND)
        return cls(mask, universe_bound)

    @classmethod
    def interval(cls, lo: int, hi: int) -> "IntSet":
        """The integers in [lo, hi] (empty when lo > hi)."""
        if hi < lo:
            return cls(0, max(0, hi, DEFAULT_UNIVERSE_BOUND))
        lo = max(lo, 0)
        mask = ((1 << (hi - lo + 1)) - 1) << lo
        return cls(mask, max(hi, DEFAULT_UNIVERSE_BOUND))

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, e: int) -> bool:
        return e >= 0 and (self.mask >> e) & 1 == 1

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        # universe_bound is capacity metadata, not identity
        if isinstance(other, IntSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: "IntSet") -> bool:
        return self.mask & ~other.mask == 0

    def __and__(self, other: "IntSet") -> "IntSet":
        return IntSet(self.mask & other.mask, min(self.universe_bound, other.universe_bound))

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet(self.mask | other.mask, max(self.universe_bound, other.universe_bound))

    def __sub__(self, other: "IntSet") -> "IntSet":
        return IntSet(self.mask & ~other.mask, self.universe_bound)

    def __repr__(self) -> str:
        return f"IntSet({{{to_text(self)}}})"

    def min(self) -> int:
        if not self.mask:
            raise EmptySetError("min of empty set")
        return (self.mask & -self.mask).bit_length() - 1

    def max(self) -> int:
        if not self.mask:
            raise EmptySetError("max of empty set")
        return self.mask.bit_length() - 1


@dataclass(frozen=True)
class SignedSet:
    """A finite set of (possibly negative) integers: mask shifted by offset."""

    mask: int
    offset: int  # true value = bit index + offset

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1 + self.offset
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        i = v - self.offset
        return i >= 0 and (self.mask >> i) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SignedSet):
            return sorted(self) == sorted(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self)))

    def __repr__(self) -> str:
        return "SignedSet({%s})" % ",".join(str(v) for v in sorted(self))


@dataclass(frozen=True)
class SetStats:
    """min, max, span ell = max-min+1, and gcd of pairwise differences."""

    min: int
    max: int
    span: int
    diff_gcd: int | None = field(default=None)


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """{x+y : x in a, y in b}; empty if either operand is empty."""
    if not a or not b:
        return IntSet(0, max(a.universe_bound, b.universe_bound))
    # shift-or over the smaller operand's elements
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    out = 0
    for e in small:
        out |= big.mask << e
    return IntSet(out, max(out.bit_length() - 1, 0, a.universe_bound, b.universe_bound))


def k_fold_sumset(a: IntSet, k: int) -> IntSet:
    """a + a + ... + a, k copies (k >= 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = a
    for _ in range(k - 1):
        out = sumset(out, a)
    return out


def dilate(a: IntSet, k: int) -> IntSet:
    """{k*x : x in a}; preserves cardinality."""
    if k < 1:
        raise ValueError("k must be >= 1")
    mask = 0
    for e in a:
        mask |= 1 << (k * e)
    return IntSet(mask, max(mask.bit_length() - 1, a.universe_bound))


def difference_set(a: IntSet, b: IntSet) -> SignedSet:
    """{x-y : x in a, y in b} over a signed range; empty if either is empty."""
    if not a or not b:
        return SignedSet(0, 0)
    offset = -b.max()
    out = 0
    bmax = b.max()
    for y in b:
        out |= a.mask << (bmax - y)
    return SignedSet(out, offset)


def positive_part(d: SignedSet) -> IntSet:
    """The strictly positive members of a signed set."""
    if d.offset >= 1:
        return IntSet.of(iter(d))
    shift = 1 - d.offset  # bit index of value 1
    return IntSet(d.mask >> shift << 1, max(DEFAULT_UNIVERSE_BOUND, d.mask.bit_length()))


def stats(a: IntSet) -> SetStats:
    """min/max/span; diff_gcd needs at least two elements (else None there,
    and an error for the empty set)."""
    if not a:
        raise EmptySetError("stats of empty set")
    lo, hi = a.min(), a.max()
    if len(a) < 2:
        return SetStats(lo, hi, hi - lo + 1, None)
    g = 0
    for e in a:
        g = math.gcd(g, e - lo)
    return SetStats(lo, hi, hi - lo + 1, g)


def diff_gcd(a: IntSet) -> int:
    """d(A): gcd of all pairwise differences; undefined for |A| < 2."""
    if len(a) < 2:
        raise ValueError("d(A) undefined for sets with fewer than two elements")
    g = stats(a).diff_gcd
    assert g is not None
    return g


def residue_class_set(n: int, modulus: int, residues: Iterable[int]) -> IntSet:
    """{a in [1, n] : a mod modulus in residues}."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    rset = set(residues)
    for r in rset:
        if not 0 <= r < modulus:
            raise ValueError(f"residue {r} outside [0, {modulus - 1}]")
    return IntSet.of((a for a in range(1, n + 1) if a % modulus in rset),
                     universe_bound=max(n, DEFAULT_UNIVERSE_BOUND))


def to_text(a: IntSet) -> str:
    """Comma-separated ascending elements, e.g. '1,4,6,9'."""
    return ",".join(str(e) for e in a)


def from_text(text: str, universe_bound: int | None = None) -> IntSet:
    """Parse the comma-separated set literal format."""
    text = text.strip()
    if not text:
        return IntSet.of((), universe_bound)
    return IntSet.of((int(tok) for tok in text.split(",")), universe_bound)


def from_file(path: str, universe_bound: int | None = None) -> IntSet:
    """One integer per line; '#' starts a comment."""
    elems = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                elems.append(int(line))
    return IntSet.of(elems, universe_bound)
