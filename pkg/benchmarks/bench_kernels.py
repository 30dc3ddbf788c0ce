"""Compare the compiled geometry-predicate kernel against the pure fallback.

Two workloads: raw predicate throughput (orientation signs on random
homogeneous points) and an end-to-end refinement workload (the φ-boundary
vanishing check, which is dominated by predicate calls).

Usage: python benchmarks/bench_kernels.py [--cases N]
"""

import argparse
import time

from scissors.geom import _predicates_py as pure
from scissors.rng import SplitMix64

try:
    from scissors.geom import _predicates_cy as compiled
except ImportError:
    compiled = None


def bench_orient(kernel, rounds=20000):
    rng = SplitMix64.stream(99, 0)
    pts = []
    for _ in range(400):
        pts.append(tuple(rng.randint(-10 ** 6, 10 ** 6) for _ in range(3))
                   + (rng.randint(1, 1000),))
    t0 = time.perf_counter()
    acc = 0
    for i in range(rounds):
        a = pts[i % 400]
        b = pts[(i * 7 + 1) % 400]
        c = pts[(i * 13 + 2) % 400]
        d = pts[(i * 29 + 3) % 400]
        acc += kernel.orient([a, b, c, d])
    dt = time.perf_counter() - t0
    return dt, acc


def bench_phi(kernel_name, cases):
    # select the kernel by monkeypatching the dispatch module
    from scissors.geom import predicates as disp
    module = compiled if kernel_name == "compiled" else pure
    saved = {name: getattr(disp, name)
             for name in ("hnormalize", "hdet", "orient", "hyperplane",
                          "apply_functional", "side", "cut_point",
                          "centroid")}
    try:
        for name in saved:
            setattr(disp, name, getattr(module, name))
        from scissors.geom.refine import phi_boundary_check
        t0 = time.perf_counter()
        for case in range(cases):
            rng = SplitMix64.stream(404, case)
            dim = 2 if case % 2 == 0 else 3
            pts = [tuple(rng.fraction(8, 3) for _ in range(dim))
                   for _ in range(dim + 2)]
            assert phi_boundary_check(pts, dim)
        return time.perf_counter() - t0
    finally:
        for name, fn in saved.items():
            setattr(disp, name, fn)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", type=int, default=60)
    args = ap.parse_args()

    print("orientation predicate throughput (20k signs on big ints):")
    dt_pure, acc1 = bench_orient(pure)
    print(f"  pure     {dt_pure * 1000:8.1f} ms")
    if compiled is not None:
        dt_cy, acc2 = bench_orient(compiled)
        assert acc1 == acc2, "kernels disagree!"
        print(f"  compiled {dt_cy * 1000:8.1f} ms   "
              f"({dt_pure / dt_cy:.2f}x speedup)")
    else:
        print("  compiled kernel not built")

    print(f"end-to-end refinement workload ({args.cases} boundary checks):")
    dt_pure = bench_phi("pure", args.cases)
    print(f"  pure     {dt_pure * 1000:8.1f} ms")
    if compiled is not None:
        dt_cy = bench_phi("compiled", args.cases)
        print(f"  compiled {dt_cy * 1000:8.1f} ms   "
              f"({dt_pure / dt_cy:.2f}x speedup)")


if __name__ == "__main__":
    main()
