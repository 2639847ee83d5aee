#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot loops (exact convolution, subset-sweep counting) on
synthetic inputs, then an end-to-end workload (the deep binary tree
polynomial) under each backend.

Usage:
    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

import argparse
import random
import time

from indseqlab import _backend, _kernels_py
from indseqlab.indpoly import indpoly_sst
from indseqlab.trees import random_tree


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_convolve(repeat, quick):
    rng = random.Random(7)
    sizes = [(64, 32), (256, 64), (1024, 256)]
    if not quick:
        sizes.append((4096, 1024))
    print("convolve: coefficient count x coefficient bits")
    print("%-18s %12s %12s %8s" % ("size x bits", "python", "compiled", "speedup"))
    for size, bits in sizes:
        a = [rng.getrandbits(bits) + 1 for _ in range(size)]
        b = [rng.getrandbits(bits) + 1 for _ in range(size)]
        t_py = best_of(repeat, _kernels_py.convolve, a, b)
        row = "%-18s %12.4f" % ("%dx%d" % (size, bits), t_py)
        if _backend._kernels_c is not None:
            t_c = best_of(repeat, _backend._kernels_c.convolve, a, b)
            row += " %12.4f %7.1fx" % (t_c, t_py / t_c)
        print(row)


def bench_subset_sweep(repeat, quick):
    ns = [14, 18] if quick else [14, 18, 20, 22]
    print("subset sweep: independent-set counts of a random tree")
    print("%-18s %12s %12s %8s" % ("vertices", "python", "compiled", "speedup"))
    for n in ns:
        masks = random_tree(n, 12345).neighbor_masks()
        t_py = best_of(repeat, _kernels_py.independent_set_counts, masks)
        row = "%-18s %12.4f" % (n, t_py)
        if _backend._kernels_c is not None:
            t_c = best_of(repeat, _backend._kernels_c.independent_set_counts, masks)
            row += " %12.4f %7.1fx" % (t_c, t_py / t_c)
        print(row)


def bench_end_to_end(repeat, quick):
    counts = [2] * 6 + [1] * 17 if quick else [2] * 7 + [1] * 23
    label = "T(2^%d 1^%d)" % (counts.count(2), counts.count(1))
    print("end to end: independence polynomial of %s" % label)
    print("%-18s %12s %12s %8s" % ("backend", "python", "compiled", "speedup"))
    t_py = t_c = None
    for name in _backend.available():
        prev = _backend.use(name)
        try:
            elapsed = best_of(repeat, indpoly_sst, counts)
        finally:
            _backend.use(prev)
        if name == "py":
            t_py = elapsed
        else:
            t_c = elapsed
    row = "%-18s %12.4f" % (label, t_py)
    if t_c is not None:
        row += " %12.4f %7.1fx" % (t_c, t_py / t_c)
    print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()
    print("backends available: %s" % (", ".join(_backend.available())))
    if _backend._kernels_c is None:
        print("compiled kernels not built; timing the fallback only")
    print()
    bench_convolve(args.repeat, args.quick)
    print()
    bench_subset_sweep(args.repeat, args.quick)
    print()
    bench_end_to_end(args.repeat, args.quick)


if __name__ == "__main__":
    main()
