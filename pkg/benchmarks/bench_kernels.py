"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times exact inertia on the 802 B* graphs and on random graphs of order 30,
canonical codes of all order-6 labellings, and the full order-6 sweep.
"""

import argparse
import random
import time

from graphinertia import kernels
from graphinertia.enumerator import BkClass, census
from graphinertia.graph import Graph, realize_bk


def _random_rows(rng, n, density=0.5):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def workloads():
    bstar = [realize_bk(r.spec) for k in range(4, 14) for r in census(k, 13, BkClass.B0)]
    rng = random.Random(0)
    dense = [Graph(30, tuple(_random_rows(rng, 30))) for _ in range(200)]
    labelled6 = [kernels.rows_from_pairs(6, m) for m in range(1 << 15)]
    return {
        "inertia / 802 B* graphs": lambda: [kernels.inertia_counts(g.adj, g.order) for g in bstar],
        "inertia / 200 random n=30": lambda: [kernels.inertia_counts(g.adj, 30) for g in dense],
        "canonical_code / 32768 n=6": lambda: [kernels.canonical_code(r, 6) for r in labelled6],
        "labelled_codes n=6": lambda: kernels.labelled_codes(6),
    }


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["python"] + (["compiled"] if kernels.compiled_available() else [])
    jobs = workloads()
    prev = kernels.backend_name()
    print(f"{'workload':32s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    try:
        for name, fn in jobs.items():
            times = []
            for b in backends:
                kernels.use_backend(b)
                times.append(bench(fn, args.repeat))
            row = f"{name:32s}" + "".join(f"{t:11.3f}s" for t in times)
            if len(times) == 2:
                row += f"   {times[0] / times[1]:8.1f}x"
            print(row)
    finally:
        kernels.use_backend(prev)


if __name__ == "__main__":
    main()
