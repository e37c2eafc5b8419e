"""Compare the numba and numpy kernel backends.

Usage:
    python benchmarks/bench_kernels.py [--repeat R] [--census-max N]

The first numba call per kernel is timed separately as compile/cache load.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from threshgraph import _kernels


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--census-max", type=int, default=7)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    masks8 = rng.integers(0, 1 << 28, size=100_000, dtype=np.int64)
    cases = [(f"threshold_census n={n}", "threshold_census", (n,))
             for n in range(5, args.census_max + 1)]
    cases += [
        ("threshold_flags 1e5 x n=8", "threshold_flags", (masks8, 8)),
        ("forbidden_flags 1e5 x n=8", "forbidden_flags", (masks8, 8)),
        ("ascent_census n=9", "ascent_census", (9,)),
        ("ascent_census n=10", "ascent_census", (10,)),
    ]
    backends = [_kernels.numpy_impl]
    if _kernels.numba_impl is not None:
        backends.append(_kernels.numba_impl)
        for label, name, call_args in cases:
            t0 = time.perf_counter()
            getattr(_kernels.numba_impl, name)(*call_args)
            print(f"numba warm-up {label:<28} {time.perf_counter() - t0:8.3f}s")
    else:
        print("numba not importable; numpy only")

    print(f"{'case':<28}" + "".join(f"{b.name:>12}" for b in backends) + "     speedup")
    for label, name, call_args in cases:
        times, results = [], []
        for b in backends:
            t, r = timed(getattr(b, name), *call_args, repeat=args.repeat)
            times.append(t)
            results.append(r)
        same = all(np.array_equal(np.asarray(results[0]), np.asarray(r)) for r in results[1:])
        speed = f"{times[0] / times[1]:9.1f}x" if len(times) > 1 else ""
        flag = "" if same else "  MISMATCH"
        print(f"{label:<28}" + "".join(f"{t:11.4f}s" for t in times) + speed + flag)


if __name__ == "__main__":
    main()
