#!/usr/bin/env python3
"""Timing comparison: compiled kernels vs the pure-Python fallback.

Run after building the extension (pip install -e . --no-build-isolation):

    python benchmarks/bench_kernels.py
"""

import random
import time

from monocremona import _kernels_py
from monocremona.enumeration import compositions

try:
    from monocremona import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat=5):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_pair(name, make_runner):
    pure = best_of(make_runner(_kernels_py))
    line = f"{name:<28} pure {pure * 1e3:9.2f} ms"
    if _speedups is not None:
        fast = best_of(make_runner(_speedups))
        line += f"   compiled {fast * 1e3:9.2f} ms   speedup {pure / fast:6.1f}x"
    print(line)


def main():
    rand = random.Random(42)
    mats4 = [[rand.randint(0, 6) for _ in range(16)] for _ in range(20000)]
    mats5 = [[rand.randint(0, 4) for _ in range(25)] for _ in range(5000)]

    def det_runner(impl):
        def run():
            for m in mats4:
                impl.det_small(m, 4)

        return run

    def canon_runner(impl):
        def run():
            for m in mats5:
                impl.canonical_key(m, 5)

        return run

    def scan_runner(n, d):
        comps = compositions(d, n + 1)

        def make(impl):
            def run():
                total = 0
                for first in range(len(comps)):
                    raw, _ = impl.scan_multisets(comps, n + 1, d, first)
                    total += raw

            return run

        return make

    print(f"compiled extension available: {_speedups is not None}")
    bench_pair("det_small 4x4 x20000", det_runner)
    bench_pair("canonical_key 5x5 x5000", canon_runner)
    bench_pair("scan (n=3, d=4)", scan_runner(3, 4))
    bench_pair("scan (n=3, d=5)", scan_runner(3, 5))
    bench_pair("scan (n=2, d=8)", scan_runner(2, 8))


if __name__ == "__main__":
    main()
