#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the hot kernels over an exhaustive corpus of DNA words and reports
per-backend wall times.  Usage: python benchmarks/bench_backends.py [n]
"""
import importlib
import sys
import time
from itertools import product

sys.path.insert(0, "src")

from labelcodes.labeling import minimal_dna_set  # noqa: E402


def load_backends():
    backends = {}
    py = importlib.import_module("labelcodes._kernels_py")
    backends[py.BACKEND] = py
    try:
        cy = importlib.import_module("labelcodes._kernels_cy")
        backends[cy.BACKEND] = cy
    except ImportError:
        print("compiled backend not available; benchmarking pure Python only")
    return backends


def bench(n=8):
    labels = minimal_dna_set()
    table = labels.pair_table
    la, lb = labels.label_first, labels.label_second
    adj = labels.zero_adj
    words = list(product(range(4), repeat=n))
    backends = load_backends()

    timings = {}
    for name, mod in backends.items():
        t0 = time.perf_counter()
        framed = [mod.label_framed_pairs(x, 4, table, 0, 0) for x in words]
        t1 = time.perf_counter()
        for u in framed:
            status, _ = mod.invert_framed_pairs(u, 4, la, lb, adj, 0, 0, False)
            assert status == mod.OK
        t2 = time.perf_counter()
        for x in words:
            mod.integrate(mod.derivative(x, 4), 4)
        t3 = time.perf_counter()
        for u in framed:
            mod.vt_weight_sum(mod.signature(u))
        t4 = time.perf_counter()
        timings[name] = {
            "label_framed": t1 - t0,
            "invert": t2 - t1,
            "derivative+integrate": t3 - t2,
            "signature+vt": t4 - t3,
        }

    kernels = ["label_framed", "invert", "derivative+integrate", "signature+vt"]
    names = list(timings)
    print(f"\n{len(words)} words of length {n}\n")
    header = f"{'kernel':<22}" + "".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for kernel in kernels:
        row = f"{kernel:<22}"
        for name in names:
            row += f"{timings[name][kernel]:>11.3f}s"
        if len(names) == 2:
            a, b = (timings[n][kernel] for n in names)
            slow, fast = max(a, b), min(a, b)
            row += f"{slow / fast:>9.1f}x"
        print(row)


if __name__ == "__main__":
    bench(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
