"""Timing comparison of the compiled and pure-Python kernel backends.

Usage:  python3 benchmarks/bench_kernels.py [--n-sf1 N] [--n-sf2 N] [--reps R]

Imports both backends directly (ignoring SUMFREE_PURE) so one process can
time them side by side.  The compiled backend is warmed once before timing
so JIT compilation is not billed to the measurement.
"""

import argparse
import time

from sumfree.kernels import _pure

try:
    from sumfree.kernels import _numba
except ImportError:  # pragma: no cover - numba missing: pure-only report
    _numba = None


def _time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def _row(label, pure_fn, fast_fn, reps):
    pure_t, pure_v = _time(pure_fn, reps)
    if fast_fn is None:
        print(f"{label:<28} pure {pure_t * 1e3:9.2f} ms   "
              f"compiled      n/a   result {pure_v}")
        return
    fast_fn()  # warm the JIT
    fast_t, fast_v = _time(fast_fn, reps)
    assert pure_v == fast_v, f"{label}: backend disagreement"
    speedup = pure_t / fast_t if fast_t else float("inf")
    print(f"{label:<28} pure {pure_t * 1e3:9.2f} ms   "
          f"compiled {fast_t * 1e3:9.2f} ms   x{speedup:7.1f}   "
          f"result {pure_v}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-sf1", type=int, default=20,
                        help="sum-free subset count of [n]")
    parser.add_argument("--n-sf2", type=int, default=15,
                        help="two-part splittable subset count of [n]")
    parser.add_argument("--m-schur", type=int, default=13,
                        help="modular 3-part partition search size")
    parser.add_argument("--reps", type=int, default=3)
    args = parser.parse_args()

    n1, n2, m = args.n_sf1, args.n_sf2, args.m_schur
    fast = _numba
    print(f"backends: pure python vs "
          f"{'numba (compiled)' if fast else 'NONE (numba unavailable)'}\n")

    def branch_total(mod, n):
        return 1 + sum(mod.count_sum_free_branch(n, f) for f in range(1, n + 1))

    def branch_total2(mod, n):
        return 1 + sum(mod.count_two_wise_branch(n, f) for f in range(1, n + 1))

    _row(f"sum-free count n={n1}",
         lambda: branch_total(_pure, n1),
         (lambda: branch_total(fast, n1)) if fast else None, args.reps)
    _row(f"two-part count n={n2}",
         lambda: branch_total2(_pure, n2),
         (lambda: branch_total2(fast, n2)) if fast else None, args.reps)
    _row(f"modular 3-search m={m}",
         lambda: _pure.mod_partition_search(m, 3, 10 ** 9)[:2],
         (lambda: fast.mod_partition_search(m, 3, 10 ** 9)[:2]) if fast
         else None, args.reps)
    _row("2-colorability sweep 2^14",
         lambda: sum(_pure.two_colorable_mask(mask)
                     for mask in range(1 << 14)),
         (lambda: sum(bool(fast.two_colorable_mask(mask))
                      for mask in range(1 << 14))) if fast else None,
         args.reps)


if __name__ == "__main__":
    main()
