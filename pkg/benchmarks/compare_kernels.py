"""Times the compiled float64 kernels against the pure-Python fallbacks
on identical inputs and checks they agree bitwise.

Run as: python benchmarks/compare_kernels.py [--n 192] [--reps 3]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time
from array import array

from rxtx.kernels import KERNEL_IMPL, fallback

try:
    from rxtx.kernels import _speedups
except ImportError:
    _speedups = None


def _time(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=192)
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    n = args.n
    print(f"active kernel implementation: {KERNEL_IMPL}")
    if _speedups is None:
        print("compiled kernels unavailable; nothing to compare")
        return

    rng = random.Random(args.seed)
    a = array("d", (rng.gauss(0.0, 1.0) for _ in range(n * n)))
    b = array("d", (rng.gauss(0.0, 1.0) for _ in range(n * n)))

    for name in ("gemm_f64", "gram_f64"):
        out_c = array("d", bytes(8 * n * n))
        out_py = array("d", bytes(8 * n * n))
        if name == "gemm_f64":
            run_c = lambda: _speedups.gemm_f64(a, b, n, n, n, out_c)
            run_py = lambda: fallback.gemm_f64(a, b, n, n, n, out_py)
        else:
            run_c = lambda: _speedups.gram_f64(a, n, n, out_c)
            run_py = lambda: fallback.gram_f64(a, n, n, out_py)
        t_c = _time(run_c, args.reps)
        t_py = _time(run_py, args.reps)
        match = out_c == out_py
        print(f"{name}: compiled {t_c:.4f}s  python {t_py:.4f}s  "
              f"speedup {t_py / t_c:.1f}x  bitwise match: {match}")


if __name__ == "__main__":
    main()
