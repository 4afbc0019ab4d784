"""Pure-Python bitmask kernels.

Reference implementations of the hot enumeration loops.  Sets are Python
integer bitmasks (bit e set <=> element e present), so there is no word-size
limit here; the numba backend mirrors these exactly for masks that fit in a
machine word.
"""


def _is_sum_free_mask(mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        x = low.bit_length() - 1
        if (mask << x) & mask:
            return False
        m ^= low
    return True


def count_sum_free_naive(n: int) -> int:
    """Count sum-free subsets of [n] by filtering all 2^n subsets."""
    total = 1  # empty set
    for mask in range(2, 1 << (n + 1), 2):
        if _is_sum_free_mask(mask):
            total += 1
    return total


def count_sum_free_branch(n: int, first: int) -> int:
    """Count sum-free subsets of [n] whose minimum element is `first`."""
    total = 0
    # stack entries: (next candidate, set mask, pairwise-sum mask)
    stack = [(first + 1, 1 << first, (1 << first) << first)]
    while stack:
        start, s, sums = stack.pop()
        total += 1
        for f in range(start, n + 1):
            if not (sums >> f) & 1:
                ns = s | (1 << f)
                stack.append((f + 1, ns, sums | (ns << f)))
    return total


def two_colorable_mask(mask: int) -> bool:
    """Can the set be split into two sum-free parts?

    Elements are processed in increasing order, so placing e into a part only
    needs the check that e is not a pairwise sum within that part; triples in
    which e is a summand are caught when their largest member is placed.
    """
    elems = []
    m = mask
    while m:
        low = m & -m
        elems.append(low.bit_length() - 1)
        m ^= low
    t = len(elems)
    if t == 0:
        return True
    parts = [(0, 0)] * (t + 1)
    sums = [(0, 0)] * (t + 1)
    choice = [0] * t
    depth = 0
    parts[0] = (0, 0)
    sums[0] = (0, 0)
    while True:
        if depth == t:
            return True
        e = elems[depth]
        limit = 1 if depth == 0 else 2  # pin the smallest element to part 0
        placed = False
        c = choice[depth]
        while c < limit:
            if not (sums[depth][c] >> e) & 1:
                p0, p1 = parts[depth]
                s0, s1 = sums[depth]
                if c == 0:
                    p0 |= 1 << e
                    s0 |= p0 << e
                else:
                    p1 |= 1 << e
                    s1 |= p1 << e
                parts[depth + 1] = (p0, p1)
                sums[depth + 1] = (s0, s1)
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


def count_two_wise_naive(n: int) -> int:
    """Count 2-wise sum-free subsets of [n] by testing every subset."""
    total = 0
    for mask in range(0, 1 << (n + 1), 2):
        if two_colorable_mask(mask):
            total += 1
    return total


def count_two_wise_branch(n: int, first: int) -> int:
    """Count 2-wise sum-free subsets of [n] with minimum element `first`.

    DFS over subsets in increasing-element order; a failed colorability test
    prunes every superset in the branch (the property is subset-monotone).
    """
    total = 0
    stack = [(first + 1, 1 << first)]
    while stack:
        start, s = stack.pop()
        total += 1
        for f in range(start, n + 1):
            ns = s | (1 << f)
            if two_colorable_mask(ns):
                stack.append((f + 1, ns))
    return total


def mod_partition_search(m: int, r: int, budget: int):
    """Search a partition of [m] into r parts, each sum-free mod m+1.

    Returns (status, nodes, colors): status 1 = found (colors[e] is the part
    of element e), 0 = exhaustively refuted, -1 = node budget exhausted.
    Element 1 is pinned to part 0 and only one unused part is tried per
    element (symmetry breaking).
    """
    mod = m + 1
    colors = [-1] * (m + 1)
    parts = [0] * r
    maxused = [0] * (m + 2)
    choice = [0] * (m + 2)
    depth = 1
    nodes = 0
    while True:
        if depth > m:
            return 1, nodes, colors
        e = depth
        lim = min(maxused[depth] + 1, r)
        c = choice[depth]
        placed = False
        while c < lim:
            pp = parts[c] | (1 << e)
            ok = True
            for x in range(1, m + 1):
                if (pp >> x) & 1:
                    if (pp >> ((e - x) % mod)) & 1 or (pp >> ((e + x) % mod)) & 1:
                        ok = False
                        break
            nodes += 1
            if nodes > budget:
                return -1, nodes, colors
            if ok:
                parts[c] = pp
                colors[e] = c
                choice[depth] = c + 1
                maxused[depth + 1] = max(maxused[depth], c + 1)
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
            parts[c] &= ~(1 << e)
            colors[e] = -1
