#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Each workload is one of the hot sweeps the test suite leans on: the
exchange-axiom filter, nondegeneracy feasibility tables, canonical forms,
handle slides and quasi-tree enumeration.  Run with ``--full`` for the
acceptance-scale sizes.

    python benchmarks/bench_kernels.py [--full] [--repeat N]
"""

from __future__ import annotations

import argparse
import time
from itertools import product as iproduct

from deltamatroids import _kernels_py as py_backend

try:
    from deltamatroids import _kernels as cy_backend
except ImportError:
    cy_backend = None


def sweep_sea(k, n, limit):
    count = 0
    for bmp in range(1, limit):
        if k.sea_holds(n, bmp):
            count += 1
    return count


def sweep_feas(k, n):
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    acc = 0
    for choice in iproduct((0, 1), repeat=len(positions)):
        rows = [0] * n
        for bit, (i, j) in zip(choice, positions):
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        acc ^= k.feas_bitmap(n, tuple(rows))
    return acc


def sweep_canon(k, n, limit):
    acc = 0
    for bmp in range(1, limit):
        acc ^= k.canon_bitmap(n, bmp)
    return acc


def sweep_slide(k, n, limit):
    acc = 0
    for bmp in range(1, limit):
        acc ^= k.slide_bitmap(n, bmp, 0, 1)
        acc ^= k.slide_bitmap(n, bmp, 1, 0)
    return acc


def _diagram_arrays(n):
    """Rotation arrays of every pairing word on 2n positions."""

    def matchings(points):
        if not points:
            yield []
            return
        first = points[0]
        for i in range(1, len(points)):
            rest = points[1:i] + points[i + 1 :]
            for m in matchings(rest):
                yield [(first, points[i])] + m

    out = []
    for m in matchings(list(range(2 * n))):
        pairs = sorted(m)
        edge_of = [0] * (2 * n)
        partner = [0] * (2 * n)
        for ei, (p, q) in enumerate(pairs):
            edge_of[p] = edge_of[q] = ei
            partner[p] = q
            partner[q] = p
        rot_next = [(h + 1) % (2 * n) for h in range(2 * n)]
        vertex_of = [0] * (2 * n)
        out.append((vertex_of, rot_next, edge_of, partner))
    return out


def sweep_quasi_trees(k, n):
    acc = 0
    for vertex_of, rot_next, edge_of, partner in _diagram_arrays(n):
        for signs in iproduct((0, 1), repeat=n):
            acc ^= len(
                k.quasi_tree_masks(1, n, vertex_of, rot_next, edge_of, partner, signs)
            )
    return acc


def workloads(full: bool):
    if full:
        yield "exchange axiom, all families n=4", lambda k: sweep_sea(k, 4, 1 << 16)
        yield "feasibility tables, all graphs n=5", lambda k: sweep_feas(k, 5)
        yield "canonical forms, all families n=4", lambda k: sweep_canon(k, 4, 1 << 16)
        yield "handle slides, all families n=4", lambda k: sweep_slide(k, 4, 1 << 16)
        yield "quasi-trees, all signed 5-chord words", lambda k: sweep_quasi_trees(k, 5)
    else:
        yield "exchange axiom, all families n=3", lambda k: sweep_sea(k, 3, 1 << 8)
        yield "feasibility tables, all graphs n=4", lambda k: sweep_feas(k, 4)
        yield "canonical forms, 4096 families n=4", lambda k: sweep_canon(k, 4, 4096)
        yield "handle slides, all families n=3", lambda k: sweep_slide(k, 3, 1 << 8)
        yield "quasi-trees, all signed 4-chord words", lambda k: sweep_quasi_trees(k, 4)


def run(repeat: int, full: bool):
    backends = [("python", py_backend)]
    if cy_backend is not None:
        backends.insert(0, ("cython", cy_backend))
    else:
        print("compiled kernels not available; timing pure Python only")
    width = 44
    header = f"{'workload':<{width}}" + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, fn in workloads(full):
        times = []
        check = None
        for _, backend in backends:
            best = None
            for _ in range(repeat):
                t0 = time.perf_counter()
                result = fn(backend)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            if check is None:
                check = result
            elif result != check:
                raise SystemExit(f"backends disagree on {label!r}")
            times.append(best)
        row = f"{label:<{width}}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true", help="acceptance-scale sizes")
    parser.add_argument("--repeat", type=int, default=1, help="best of N runs")
    args = parser.parse_args()
    run(args.repeat, args.full)


if __name__ == "__main__":
    main()
