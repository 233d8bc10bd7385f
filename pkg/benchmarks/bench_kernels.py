#!/usr/bin/env python3
"""Timing comparison of the compiled kernels vs. their pure-Python twins.

Runs every benchmark in the current process, then re-executes itself
with CROSSFAM_NO_NUMBA=1 (the flag must be set before import, so a
subprocess is the only clean way) and prints both columns side by side.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import json
import os
import random
import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))


def build_inputs():
    import numpy as np
    from crossfam.geom import Point, PointSet, is_general_position

    rng = random.Random(20260822)

    def rand_gp(n, hi):
        while True:
            ps = PointSet(Point(i, rng.randint(0, hi), rng.randint(0, hi))
                          for i in range(n))
            if is_general_position(ps):
                return ps

    batch = np.empty((2048, 9, 2), dtype=np.int64)
    for r in range(batch.shape[0]):
        ps = rand_gp(9, 65535)
        for i in range(9):
            batch[r, i, 0] = ps[i].x
            batch[r, i, 1] = ps[i].y

    big = rand_gp(384, 1_000_000)
    order = sorted(big, key=lambda p: (p.x, p.y))
    return {"batch": batch, "column_order": order, "small": rand_gp(11, 65535)}


def benches(inputs):
    from crossfam import _kernels

    n = len(inputs["column_order"])
    q = n // 6
    quotas = (q, q, q, q, q, n - 5 * q)

    return [
        ("k2_triple_batch (2048 x n=9)",
         lambda: _kernels.k2_triple_batch(inputs["batch"])),
        ("collinear_batch (2048 x n=9)",
         lambda: _kernels.collinear_batch(inputs["batch"])),
        ("triple probe (n=11)",
         lambda: _kernels.has_three_pairwise_crossing_segments(
             inputs["small"])),
        ("six-region scan (n=384)",
         lambda: _kernels.six_region_transversal_scan(
             inputs["column_order"], quotas)),
        ("monotone DP (n=384)",
         lambda: _kernels.longest_monotone_dp(
             [p.y for p in inputs["column_order"]])),
    ]


def run_once(repeat):
    from crossfam._accel import HAS_NUMBA

    inputs = build_inputs()
    rows = {}
    for name, fn in benches(inputs):
        fn()                                    # warm (jit compile)
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        rows[name] = best
    return {"numba": HAS_NUMBA, "rows": rows}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--emit-json", action="store_true",
                    help=argparse.SUPPRESS)
    args = ap.parse_args()

    mine = run_once(args.repeat)
    if args.emit_json:
        print(json.dumps(mine))
        return

    env = dict(os.environ, CROSSFAM_NO_NUMBA="1")
    proc = subprocess.run(
        [sys.executable, __file__, "--repeat", str(args.repeat),
         "--emit-json"],
        env=env, capture_output=True, text=True, check=True)
    other = json.loads(proc.stdout.strip().splitlines()[-1])

    fast, slow = (mine, other) if mine["numba"] else (other, mine)
    label = "compiled" if fast["numba"] else "python"
    print(f"{'kernel':38s} {'compiled':>12s} {'python':>12s} {'ratio':>8s}")
    for name in fast["rows"]:
        a, b = fast["rows"][name], slow["rows"][name]
        ratio = b / a if a > 0 else float("inf")
        print(f"{name:38s} {a * 1e3:10.3f}ms {b * 1e3:10.3f}ms "
              f"{ratio:7.1f}x")
    if not mine["numba"]:
        print(f"note: this interpreter ran the {label} column")


if __name__ == "__main__":
    main()
