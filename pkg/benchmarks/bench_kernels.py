#!/usr/bin/env python3
"""Benchmark the compiled triangle kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [n_max ...]
"""

import sys
import time

from bellpart import _pykernels

try:
    from bellpart import _ckernels
except ImportError:
    _ckernels = None


def bench(impl, kind, n_max, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        rows = []
        t0 = time.perf_counter()
        impl.extend_weighted_rows(rows, kind, n_max)
        best = min(best, time.perf_counter() - t0)
    return best, rows


def main():
    sizes = [int(a) for a in sys.argv[1:]] or [100, 300, 600]
    impls = [("python", _pykernels)]
    if _ckernels is not None:
        impls.append(("cython", _ckernels))
    else:
        print("compiled kernel not available; benchmarking fallback only")

    for n_max in sizes:
        for kind, kind_name in ((0, "classical"), (1, "type-B")):
            results = {}
            reference = None
            for name, impl in impls:
                elapsed, rows = bench(impl, kind, n_max)
                results[name] = elapsed
                if reference is None:
                    reference = rows
                elif rows != reference:
                    raise AssertionError("kernel outputs differ")
            line = f"n_max={n_max:4d} {kind_name:9s}"
            for name, elapsed in results.items():
                line += f"  {name}: {elapsed * 1e3:8.2f} ms"
            if len(results) == 2:
                line += f"  speedup: {results['python'] / results['cython']:.2f}x"
            print(line)


if __name__ == "__main__":
    main()
