#!/usr/bin/env python3
"""Benchmark the hot integrator kernels: numba-compiled versus pure numpy.

Run directly for a timing of the current path, or with --compare to spawn a
subprocess with OPTOSQUEEZE_NO_NUMBA=1 and print both paths side by side:

    python benchmarks/bench_kernels.py --compare
"""

import argparse
import json
import os
import subprocess
import sys
import time

from optosqueeze import (
    DriveSpec,
    IntegratorControls,
    MeanSource,
    SystemParams,
    TargetAmplitudes,
    integrate_cm,
    integrate_means,
)
from optosqueeze.kernels import NUMBA_ENABLED

PERIODS = 60


def bench_once():
    params = SystemParams(kappa=0.1, gamma_m=0.001, J=2.0, delta_L=3.0,
                          delta_R=3.0, g=4e-6)
    drive = DriveSpec(2.0, {0: 7e4, 1: 3.5e4, -1: 3.5e4})
    targets = TargetAmplitudes.from_couplings(0.1, 0.04, 0.08, 0.02, params.g)
    controls = IntegratorControls()
    t_end = PERIODS * drive.period

    # warm-up triggers jit compilation so it is not timed
    integrate_means(params, drive, drive, t_end=2 * drive.period)
    src = MeanSource.from_targets(targets, params, 2.0)
    integrate_cm(params, src, t_end=2 * drive.period)

    t0 = time.perf_counter()
    series = integrate_means(params, drive, drive, t_end=t_end,
                             controls=controls)
    t_mean = time.perf_counter() - t0

    t0 = time.perf_counter()
    cov = integrate_cm(params, src, t_end=t_end, controls=controls)
    t_cm = time.perf_counter() - t0

    return {
        "numba": NUMBA_ENABLED,
        "periods": PERIODS,
        "mean_seconds": t_mean,
        "mean_steps": series.meta["n_steps"],
        "cm_seconds": t_cm,
        "cm_steps": cov.meta["n_steps"],
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--compare", action="store_true",
                        help="also time the pure-numpy path in a subprocess")
    parser.add_argument("--json", action="store_true",
                        help="print a single json record (used by --compare)")
    args = parser.parse_args()

    result = bench_once()
    if args.json:
        print(json.dumps(result))
        return

    def show(r):
        path = "numba @njit" if r["numba"] else "pure numpy"
        print(f"{path:>12}: mean-field {r['periods']} periods "
              f"{r['mean_seconds']:8.3f}s ({r['mean_steps']} steps), "
              f"covariance {r['cm_seconds']:8.3f}s ({r['cm_steps']} steps)")

    show(result)
    if args.compare:
        env = dict(os.environ)
        if result["numba"]:
            env["OPTOSQUEEZE_NO_NUMBA"] = "1"
        else:
            env.pop("OPTOSQUEEZE_NO_NUMBA", None)
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--json"],
            env=env, capture_output=True, text=True, check=True,
        )
        other = json.loads(out.stdout.strip().splitlines()[-1])
        show(other)
        if result["numba"] and not other["numba"]:
            print(f"speedup: mean-field x{other['mean_seconds'] / result['mean_seconds']:.1f}, "
                  f"covariance x{other['cm_seconds'] / result['cm_seconds']:.1f}")


if __name__ == "__main__":
    main()
