"""Benchmark the compiled kernel against the NumPy fallback.

The hot kernel is the symmetric root-ladder power sum used by the classical
root-side oracle at k = 10^7 (20 million complex powers per call).

Run: python benchmarks/bench_kernels.py
"""

import time

from zetaff._kernels import BACKEND, _purepy

try:
    from zetaff._kernels import _core
except ImportError:
    _core = None

A = 4.5238 - 2.3561945j
C = 1.9519924804725239
MU = 2.6


def timeit(fn, k, repeats=3):
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn(A, C, MU, k)
        best = min(best, time.perf_counter() - start)
    return best, value


def main():
    print(f"active backend: {BACKEND}")
    for k in (10**6, 10**7):
        t_np, v_np = timeit(_purepy.power_sum_symmetric, k)
        line = f"k={k:>9d}  numpy {t_np:8.3f} s"
        if _core is not None:
            t_cy, v_cy = timeit(_core.power_sum_symmetric, k)
            rel = abs(v_cy - v_np) / abs(v_np)
            line += f"  cython {t_cy:8.3f} s  speedup {t_np / t_cy:5.2f}x  rel_diff {rel:.2e}"
        else:
            line += "  (cython kernel not built)"
        print(line)


if __name__ == "__main__":
    main()
