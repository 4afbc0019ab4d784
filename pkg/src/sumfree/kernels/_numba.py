"""numba @njit kernels over uint64 bitmasks.

Same algorithms as kernels._pure, restricted to universes that fit a machine
word (element values <= 62).  All kernels release the GIL so shard workers
can run on a thread pool.
"""

import numpy as np
from numba import int64, njit, uint64

MAX_ELEMENT = 62

_ONE = uint64(1)


@njit(cache=True, nogil=True)
def count_sum_free_naive(n):
    total = int64(1)  # empty set
    for mask in range(2, 1 << (n + 1), 2):
        m = uint64(mask)
        ok = True
        for x in range(1, n + 1):
            if (m >> uint64(x)) & _ONE:
                if (m << uint64(x)) & m:
                    ok = False
                    break
        if ok:
            total += 1
    return total


@njit(cache=True, nogil=True)
def count_sum_free_branch(n, first):
    cap = (n + 2) * (n + 2)
    starts = np.empty(cap, np.int64)
    sets_ = np.empty(cap, np.uint64)
    sums_ = np.empty(cap, np.uint64)
    starts[0] = first + 1
    sets_[0] = _ONE << uint64(first)
    sums_[0] = (_ONE << uint64(first)) << uint64(first)
    top = 1
    total = int64(0)
    while top > 0:
        top -= 1
        start = starts[top]
        s = sets_[top]
        sums = sums_[top]
        total += 1
        for f in range(start, n + 1):
            if not (sums >> uint64(f)) & _ONE:
                ns = s | (_ONE << uint64(f))
                starts[top] = f + 1
                sets_[top] = ns
                sums_[top] = sums | (ns << uint64(f))
                top += 1
    return total


@njit(cache=True, nogil=True)
def _two_colorable(mask, elems, choice, sums0, sums1, parts0, parts1):
    t = 0
    for x in range(0, MAX_ELEMENT + 1):
        if (mask >> uint64(x)) & _ONE:
            elems[t] = x
            t += 1
    if t == 0:
        return True
    depth = 0
    choice[0] = 0
    sums0[0] = uint64(0)
    sums1[0] = uint64(0)
    parts0[0] = uint64(0)
    parts1[0] = uint64(0)
    while True:
        if depth == t:
            return True
        e = uint64(elems[depth])
        limit = 1 if depth == 0 else 2  # pin the smallest element to part 0
        placed = False
        c = choice[depth]
        while c < limit:
            s = sums0[depth] if c == 0 else sums1[depth]
            if not (s >> e) & _ONE:
                if c == 0:
                    p = parts0[depth] | (_ONE << e)
                    parts0[depth + 1] = p
                    sums0[depth + 1] = sums0[depth] | (p << e)
                    parts1[depth + 1] = parts1[depth]
                    sums1[depth + 1] = sums1[depth]
                else:
                    p = parts1[depth] | (_ONE << e)
                    parts1[depth + 1] = p
                    sums1[depth + 1] = sums1[depth] | (p << e)
                    parts0[depth + 1] = parts0[depth]
                    sums0[depth + 1] = sums0[depth]
                choice[depth] = c + 1
                depth += 1
                if depth < t:
                    choice[depth] = 0
                placed = True
                break
            c += 1
        if not placed:
            depth -= 1
            if depth < 0:
                return False


@njit(cache=True, nogil=True)
def two_colorable_mask(mask):
    elems = np.empty(64, np.int64)
    choice = np.empty(64, np.int8)
    sums0 = np.empty(65, np.uint64)
    sums1 = np.empty(65, np.uint64)
    parts0 = np.empty(65, np.uint64)
    parts1 = np.empty(65, np.uint64)
    return _two_colorable(uint64(mask), elems, choice, sums0, sums1, parts0, parts1)


@njit(cache=True, nogil=True)
def count_two_wise_naive(n):
    elems = np.empty(64, np.int64)
    choice = np.empty(64, np.int8)
    sums0 = np.empty(65, np.uint64)
    sums1 = np.empty(65, np.uint64)
    parts0 = np.empty(65, np.uint64)
    parts1 = np.empty(65, np.uint64)
    total = int64(0)
    for mask in range(0, 1 << (n + 1), 2):
        if _two_colorable(uint64(mask), elems, choice, sums0, sums1, parts0, parts1):
            total += 1
    return total


@njit(cache=True, nogil=True)
def count_two_wise_branch(n, first):
    elems = np.empty(64, np.int64)
    choice = np.empty(64, np.int8)
    sums0 = np.empty(65, np.uint64)
    sums1 = np.empty(65, np.uint64)
    parts0 = np.empty(65, np.uint64)
    parts1 = np.empty(65, np.uint64)
    cap = (n + 2) * (n + 2)
    starts = np.empty(cap, np.int64)
    sets_ = np.empty(cap, np.uint64)
    starts[0] = first + 1
    sets_[0] = _ONE << uint64(first)
    top = 1
    total = int64(0)
    while top > 0:
        top -= 1
        start = starts[top]
        s = sets_[top]
        total += 1
        for f in range(start, n + 1):
            ns = s | (_ONE << uint64(f))
            if _two_colorable(ns, elems, choice, sums0, sums1, parts0, parts1):
                starts[top] = f + 1
                sets_[top] = ns
                top += 1
    return total


@njit(cache=True, nogil=True)
def mod_partition_search(m, r, budget):
    mod = m + 1
    colors = np.full(m + 1, -1, np.int8)
    parts = np.zeros(r, np.uint64)
    maxused = np.zeros(m + 2, np.int8)
    choice = np.zeros(m + 2, np.int8)
    depth = 1
    nodes = int64(0)
    while True:
        if depth > m:
            return 1, nodes, colors
        e = depth
        lim = min(maxused[depth] + 1, r)
        c = choice[depth]
        placed = False
        while c < lim:
            pp = parts[c] | (_ONE << uint64(e))
            ok = True
            for x in range(1, m + 1):
                if (pp >> uint64(x)) & _ONE:
                    if (pp >> uint64((e - x) % mod)) & _ONE or (
                        pp >> uint64((e + x) % mod)
                    ) & _ONE:
                        ok = False
                        break
            nodes += 1
            if nodes > budget:
                return -1, nodes, colors
            if ok:
                parts[c] = pp
                colors[e] = c
                choice[depth] = c + 1
                nxt = maxused[depth]
                if c + 1 > nxt:
                    nxt = c + 1
                maxused[depth + 1] = nxt
                choice[depth + 1] = 0
                depth += 1
                placed = True
                break
            c += 1
        if not placed:
            depth -= 1
            if depth < 1:
                return 0, nodes, colors
            e = depth
            c = colors[e]
            parts[c] = parts[c] & ~(_ONE << uint64(e))
            colors[e] = -1
