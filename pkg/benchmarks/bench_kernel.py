#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python
fallback on the hot loop: lattice-point enumeration under subcurve
inequality constraints.

The constraint systems are prepared once from a graph census (that part is
identical for both kernels and excluded from timing); each kernel then
enumerates the same boxes.

Usage: python3 benchmarks/bench_kernel.py [--genus G] [--max-vertices N]
       [--pad P] [--repeat R]
"""

import argparse
import math
import statistics
import time

from neronjac import _kernel_py, census
from neronjac.balance import _balance_checks, _m_of_set, _threshold

try:
    from neronjac import _speedups
except ImportError:
    _speedups = None


def build_cases(genus, max_vertices, pad):
    """One enumerate_box argument tuple per (census graph, degree); pad
    widens the per-vertex boxes to grow the search space."""
    cases = []
    for g in census(genus, max_vertices):
        n = g.n_vertices
        full = frozenset(range(n))
        checks = _balance_checks(g)
        scale = 2 * (2 * genus - 2)
        masks = [c.mask for c in checks]
        for d in range(-2 * genus, 4 * genus + 1):
            lows, highs = [], []
            for v in range(n):
                lows.append(math.ceil(_m_of_set(g, {v}, d)) - pad)
                highs.append(d - math.ceil(_m_of_set(g, full - {v}, d)) + pad)
            thresholds = [
                _threshold(genus, d, c.w, c.delta) - scale * pad for c in checks
            ]
            cases.append((lows, highs, d, masks, thresholds, scale))
    return cases


def run(kernel, cases, repeat):
    times = []
    total = 0
    for _ in range(repeat):
        total = 0
        t0 = time.perf_counter()
        for case in cases:
            total += len(kernel.enumerate_box(*case))
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), total


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--genus", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=4)
    ap.add_argument("--pad", type=int, default=3,
                    help="widen each box by this much on both sides")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    cases = build_cases(args.genus, args.max_vertices, args.pad)
    rows = []
    for name, mod in [("python", _kernel_py)] + (
        [("compiled", _speedups)] if _speedups else []
    ):
        best, median, total = run(mod, cases, args.repeat)
        rows.append((name, best, median, total))

    totals = {r[3] for r in rows}
    assert len(totals) == 1, f"kernels disagree on output size: {totals}"

    print(
        f"workload: genus {args.genus}, <= {args.max_vertices} vertices, "
        f"d in [{-2 * args.genus}, {4 * args.genus}], pad {args.pad}: "
        f"{len(cases)} boxes, {rows[0][3]} lattice points found"
    )
    print(f"{'kernel':10} {'best (s)':>10} {'median (s)':>11}")
    for name, best, median, _ in rows:
        print(f"{name:10} {best:10.4f} {median:11.4f}")
    if len(rows) == 2:
        print(f"speedup (best): {rows[0][1] / rows[1][1]:.2f}x")


if __name__ == "__main__":
    main()
