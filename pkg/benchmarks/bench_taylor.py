"""Benchmark the compiled Taylor kernel against the pure-Python twin.

Times the three hot kernel entry points on a representative workload
(the stepping pattern the zero chain produces) and reports the speedup.

Run from the repository root:

    python benchmarks/bench_taylor.py
"""
from __future__ import annotations

import time

from pcfzeros import _taylor_py

try:
    from pcfzeros import _taylor_c
except ImportError:
    _taylor_c = None

A = -3.2
Z0 = -4.0 + 2.0j
Y0 = 0.7 - 0.4j
Y1 = -0.1 + 1.1j
N = 30
WAYPOINTS = [-4.0 + 2.0j, -2.5 + 3.5j, -1.0 + 5.0j, 1.5 + 5.0j]


def bench(kernel, reps):
    derivs = kernel.scaled_derivs(A, Z0, Y0, Y1, N + 1)

    t0 = time.perf_counter()
    for _ in range(reps):
        kernel.scaled_derivs(A, Z0, Y0, Y1, N + 1)
    t_derivs = (time.perf_counter() - t0) / reps

    t0 = time.perf_counter()
    for _ in range(reps):
        kernel.taylor_eval(derivs, 0.3 + 0.2j)
    t_eval = (time.perf_counter() - t0) / reps

    t0 = time.perf_counter()
    for _ in range(reps // 10 or 1):
        kernel.propagate_polyline(A, 0j, 1.0 + 0j, 0j, WAYPOINTS, N)
    t_prop = (time.perf_counter() - t0) / (reps // 10 or 1)

    return t_derivs, t_eval, t_prop


def main():
    reps = 2000
    names = ("scaled_derivs", "taylor_eval", "propagate_polyline")

    py = bench(_taylor_py, reps)
    print(f"pure python kernel ({reps} reps):")
    for name, t in zip(names, py):
        print(f"  {name:20s} {t * 1e6:10.1f} us")

    if _taylor_c is None:
        print("compiled kernel not available; nothing to compare")
        return

    cy = bench(_taylor_c, reps)
    print(f"compiled kernel ({reps} reps):")
    for name, t in zip(names, cy):
        print(f"  {name:20s} {t * 1e6:10.1f} us")

    print("speedup (python / compiled):")
    for name, tp, tc in zip(names, py, cy):
        print(f"  {name:20s} {tp / tc:10.1f}x")


if __name__ == "__main__":
    main()
