#!/usr/bin/env python3
"""Timing comparison of the two F_p kernel backends.

Runs both the pure-Python and (if built) the compiled kernel on the same
systems: the deformation-parameter systems produced by assemble_system at a
few sizes, plus dense-ish random systems.  Verifies the outputs agree before
reporting times.

Usage: python3 benchmarks/benchmark_kernel.py [--repeat N]
"""

import argparse
import random
import time
import warnings

warnings.filterwarnings("ignore", message="permissive profile")

from gl2kisin import _purekernel
from gl2kisin.fields import GF
from gl2kisin.rho import RhoBar
from gl2kisin.tangent import assemble_system

try:
    from gl2kisin import _fastkernel
except ImportError:
    _fastkernel = None


def profile(p, f, r, a):
    F = GF(p)
    return RhoBar(
        p=p,
        f=f,
        r=tuple(r),
        a=tuple(F(x) for x in a),
        alpha=tuple(F(3 + j) for j in range(f)),
        beta=tuple(F(5 + 2 * j) for j in range(f)),
        mode="permissive",
    )


def tangent_rows(p, f, r, a, degree_bound=None):
    system = assemble_system(profile(p, f, r, a), degree_bound=degree_bound)
    return [row for _lab, row in system.rows], system.ncols, system.p


def random_rows(nrows, ncols, density, p, seed):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        row = {
            c: rng.randrange(1, p)
            for c in rng.sample(range(ncols), max(1, int(density * ncols)))
        }
        rows.append(row)
    return rows, ncols, p


def cases():
    yield "tangent f=1 p=31 (default bound)", tangent_rows(31, 1, (13,), (7,))
    yield "tangent f=1 p=31 (bound 2p)", tangent_rows(31, 1, (13,), (7,), degree_bound=62)
    yield "tangent f=2 p=37", tangent_rows(37, 2, (13, 15), (0, 9))
    yield "random 300x200 dense 30%", random_rows(300, 200, 0.3, 31, 1)
    yield "random 600x400 dense 20%", random_rows(600, 400, 0.2, 101, 2)


def run(backend, rows, ncols, p, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = backend.kernel_basis(rows, ncols, p)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _fastkernel is None:
        print("compiled backend not built; timing the pure backend only")

    header = "%-36s %6s %6s %10s %10s %8s" % ("case", "rows", "cols", "pure", "fast", "speedup")
    print(header)
    print("-" * len(header))
    for name, (rows, ncols, p) in cases():
        pure_out, pure_t = run(_purekernel, rows, ncols, p, args.repeat)
        if _fastkernel is None:
            print("%-36s %6d %6d %9.4fs %10s %8s" % (name, len(rows), ncols, pure_t, "-", "-"))
            continue
        fast_out, fast_t = run(_fastkernel, rows, ncols, p, args.repeat)
        if pure_out != fast_out:
            raise SystemExit("backend mismatch on %r" % name)
        print(
            "%-36s %6d %6d %9.4fs %9.4fs %7.1fx"
            % (name, len(rows), ncols, pure_t, fast_t, pure_t / fast_t if fast_t else float("inf"))
        )


if __name__ == "__main__":
    main()
