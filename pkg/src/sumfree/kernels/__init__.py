"""Kernel backend selection.

The hot enumeration loops ship twice: numba @njit over uint64 masks and a
pure-Python reference (kernels._pure).  Set SUMFREE_PURE=1 to force the
fallback; it is also used automatically when numba is unavailable or when a
universe does not fit a machine word.  Both backends produce identical
counts (tests/test_kernels.py cross-checks them).
"""

import os

from . import _pure

_FORCE_PURE = os.environ.get("SUMFREE_PURE", "0") not in ("", "0")

if _FORCE_PURE:
    _accel = None
else:
    try:
        from . import _numba as _accel
    except ImportError:  # pragma: no cover - numba is a hard dep, but be safe
        _accel = None

BACKEND = "pure" if _accel is None else "numba"

# Largest element value the accelerated kernels can hold in a word.
MAX_FAST_ELEMENT = 62


def _fits(n: int) -> bool:
    return _accel is not None and n <= MAX_FAST_ELEMENT


def count_sum_free_naive(n: int) -> int:
    impl = _accel if _fits(n) else _pure
    return int(impl.count_sum_free_naive(n))


def count_sum_free_branch(n: int, first: int) -> int:
    impl = _accel if _fits(n) else _pure
    return int(impl.count_sum_free_branch(n, first))


def count_two_wise_naive(n: int) -> int:
    impl = _accel if _fits(n) else _pure
    return int(impl.count_two_wise_naive(n))


def count_two_wise_branch(n: int, first: int) -> int:
    impl = _accel if _fits(n) else _pure
    return int(impl.count_two_wise_branch(n, first))


def two_colorable_mask(mask: int) -> bool:
    if _accel is not None and mask.bit_length() <= MAX_FAST_ELEMENT + 1:
        return bool(_accel.two_colorable_mask(mask))
    return _pure.two_colorable_mask(mask)


def mod_partition_search(m: int, r: int, budget: int):
    """(status, nodes, colors): 1 found / 0 refuted / -1 budget exhausted."""
    impl = _accel if _fits(m + 1) else _pure
    status, nodes, colors = impl.mod_partition_search(m, r, budget)
    return int(status), int(nodes), [int(c) for c in colors]
