"""Sum-freeness decisions, Schur triples and the extremal searches.

mu(n, r) is the maximum size of a subset of [n] that splits into r sum-free
parts; h(r) is the largest m such that [m] splits into r parts that are
sum-free modulo m+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .intset import IntSet

DEFAULT_SEARCH_BUDGET = 2_000_000


@dataclass(frozen=True)
class SchurTriple:
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.x + self.y != self.z:
            raise ValueError("not a Schur triple: x + y != z")
        if self.x > self.y:
            raise ValueError("canonical order requires x <= y")


@dataclass(frozen=True)
class PartitionWitness:
    """r disjoint parts covering a set, each sum-free (mod `modulus` if set)."""

    parts: tuple[IntSet, ...]
    modulus: Optional[int] = None

    @property
    def r(self) -> int:
        return len(self.parts)

    def union(self) -> IntSet:
        u = IntSet(0)
        for p in self.parts:
            u = u | p
        return u

    def is_valid_for(self, a: IntSet) -> bool:
        total = 0
        mask = 0
        for p in self.parts:
            total += len(p)
            mask |= p.mask
            if self.modulus is None:
                if not is_sum_free(p):
                    return False
            elif not is_sum_free_mod(p, self.modulus):
                return False
        # disjoint parts with the right union
        return total == mask.bit_count() and mask == a.mask


def schur_triples(a: IntSet) -> list[SchurTriple]:
    """All (x, y, z) in a^3 with x <= y and x + y = z, lexicographic."""
    elems = list(a)
    out = []
    for i, x in enumerate(elems):
        for y in elems[i:]:
            if x + y in a:
                out.append(SchurTriple(x, y, x + y))
    return out


def is_sum_free(a: IntSet) -> bool:
    """True iff (A+A) and A are disjoint."""
    m = a.mask
    for x in a:
        if (m << x) & m:
            return False
    return True


def is_sum_free_mod(a: IntSet, modulus: int) -> bool:
    """True iff no x, y, z in A with x + y = z (mod modulus)."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    residues = {e % modulus for e in a}
    for x in residues:
        for y in residues:
            if (x + y) % modulus in residues:
                return False
    return True


def _r_partition_backtrack(elems: Sequence[int], r: int,
                           modulus: Optional[int]) -> Optional[list[int]]:
    """Assign each element a part index, fail-fast on monochromatic triples.

    Elements ascend; the first element is pinned to part 0 and at most one
    unused part is tried per element.
    """
    t = len(elems)
    colors = [-1] * t
    parts: list[set[int]] = [set() for _ in range(r)]

    def conflicts(e: int, part: set[int]) -> bool:
        if modulus is None:
            for x in part:
                if e - x in part or e + x in part:
                    return True
            return e + e in part
        m = modulus
        pe = {x % m for x in part} | {e % m}
        er = e % m
        for x in pe:
            if (er - x) % m in pe or (er + x) % m in pe:
                return True
        return False

    def solve(i: int, used: int) -> bool:
        if i == t:
            return True
        e = elems[i]
        for c in range(min(used + 1, r)):
            if not conflicts(e, parts[c]):
                parts[c].add(e)
                colors[i] = c
                if solve(i + 1, max(used, c + 1)):
                    return True
                parts[c].discard(e)
                colors[i] = -1
        return False

    if t == 0:
        return []
    return colors if solve(0, 0) else None


def r_wise_witness(a: IntSet, r: int,
                   modulus: Optional[int] = None) -> Optional[PartitionWitness]:
    """A partition of `a` into r sum-free parts, or None after exhaustive search."""
    if r < 1:
        raise ValueError("r must be >= 1")
    elems = list(a)
    colors = _r_partition_backtrack(elems, r, modulus)
    if colors is None:
        return None
    parts = [IntSet.of((e for e, c in zip(elems, colors) if c == i),
                       universe_bound=a.universe_bound) for i in range(r)]
    witness = PartitionWitness(tuple(parts), modulus)
    # defense against search bugs: re-validate before returning
    assert witness.is_valid_for(a)
    return witness


def is_r_wise_sum_free(a: IntSet, r: int) -> bool:
    if r == 1:
        return is_sum_free(a)
    if r == 2 and (not a or a.max() <= kernels.MAX_FAST_ELEMENT):
        return kernels.two_colorable_mask(a.mask)
    return _r_partition_backtrack(list(a), r, None) is not None


@dataclass(frozen=True)
class MuResult:
    n: int
    r: int
    value: int
    witness: Optional[PartitionWitness]
    status: str  # "exact" or "lower_bound"
    nodes: int


def mu(n: int, r: int, budget: int = DEFAULT_SEARCH_BUDGET) -> MuResult:
    """Maximum size of an r-wise sum-free subset of [n], with one maximizer.

    Candidate sizes descend from n; subsets of a given size are explored
    largest-elements-first with monotone pruning, so the first witness found
    is the extremal one.  For r >= 3 the node budget may run out, in which
    case the best witness so far is reported as a lower bound.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 1:
        return MuResult(n, r, 0, PartitionWitness(tuple(IntSet(0) for _ in range(r))),
                        "exact", 0)
    nodes = 0
    exhausted = False

    def search(size: int) -> Optional[IntSet]:
        nonlocal nodes, exhausted
        chosen: list[int] = []

        def extend(next_candidate: int) -> Optional[IntSet]:
            nonlocal nodes, exhausted
            if len(chosen) == size:
                return IntSet.of(chosen, universe_bound=n)
            if next_candidate < size - len(chosen):  # not enough elements left
                return None
            for e in range(next_candidate, size - len(chosen) - 1, -1):
                nodes += 1
                if nodes > budget:
                    exhausted = True
                    return None
                chosen.append(e)
                if is_r_wise_sum_free(IntSet.of(chosen, universe_bound=n), r):
                    found = extend(e - 1)
                    if found is not None:
                        return found
                chosen.pop()
                if exhausted:
                    return None
            return None

        return extend(n)

    for size in range(n, 0, -1):
        best = search(size)
        if best is not None:
            witness = r_wise_witness(best, r)
            assert witness is not None
            return MuResult(n, r, size, witness,
                            "lower_bound" if exhausted else "exact", nodes)
        if exhausted:
            return MuResult(n, r, 0, None, "lower_bound", nodes)
    return MuResult(n, r, 0, PartitionWitness(tuple(IntSet(0) for _ in range(r))),
                    "exact", nodes)


@dataclass(frozen=True)
class HResult:
    r: int
    value: Optional[int]
    status: str  # "exact" or "budget_exhausted"
    bracket: tuple[int, Optional[int]]
    witness: Optional[PartitionWitness]
    nodes: int


def h(r: int, budget: int = DEFAULT_SEARCH_BUDGET) -> HResult:
    """Largest m such that [m] splits into r parts sum-free modulo m+1.

    Walks m upward, certifying each success, and stops at the first m whose
    search is exhaustively refuted.  Budget exhaustion yields a bracket
    [last confirmed, unresolved m] instead of a value.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    m = 1
    last_witness: Optional[PartitionWitness] = None
    total_nodes = 0
    while True:
        status, nodes, colors = kernels.mod_partition_search(m, r, budget)
        total_nodes += nodes
        if status == -1:
            return HResult(r, None, "budget_exhausted", (m - 1, m),
                           last_witness, total_nodes)
        if status == 0:
            return HResult(r, m - 1, "exact", (m - 1, m - 1),
                           last_witness, total_nodes)
        parts = [IntSet.of((e for e in range(1, m + 1) if colors[e] == c),
                           universe_bound=m) for c in range(r)]
        witness = PartitionWitness(tuple(parts), modulus=m + 1)
        assert witness.is_valid_for(IntSet.interval(1, m))
        last_witness = witness
        m += 1
