"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the two hot loops (series coefficient recursion, fixed-step RK4
boundary integration) on representative workloads and prints the speedup.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from dlscatter import _kernels_py

try:
    from dlscatter import _kernels
except ImportError:
    _kernels = None

W = np.array([0.0, -18.0, 18.0])


def bench(fn, repeat, *args):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def main():
    cases = [
        ("series_coeffs T=60", "series_coeffs", 2000, (W, 4.0, 60)),
        ("series_coeffs T=512", "series_coeffs", 200, (W, 625.0, 512)),
        ("rk4_boundary 1e4 steps", "rk4_boundary", 50, (W, 4.0, 10_000)),
        ("rk4_boundary 1e5 steps", "rk4_boundary", 5, (W, 4.0, 100_000)),
    ]
    print(f"{'case':<26} {'python':>12} {'cython':>12} {'speedup':>9}")
    for label, name, repeat, args in cases:
        t_py = bench(getattr(_kernels_py, name), repeat, *args)
        if _kernels is None:
            print(f"{label:<26} {t_py * 1e3:>10.3f}ms {'n/a':>12} {'n/a':>9}")
            continue
        t_cy = bench(getattr(_kernels, name), repeat, *args)
        print(f"{label:<26} {t_py * 1e3:>10.3f}ms {t_cy * 1e3:>10.3f}ms "
              f"{t_py / t_cy:>8.1f}x")
    if _kernels is None:
        print("\ncompiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
