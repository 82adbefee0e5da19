"""Timing comparison of the compiled and pure-numpy kernel backends.

Run:  python3 benchmarks/bench_kernels.py

The backend is fixed at import time, so the script re-executes itself once
per backend (CARLEMANLAB_NUMBA=1/0) and prints a side-by-side table.
Workloads: 2d upwind steps, their transposes, and a batch of integral-curve
exits on the half-disc.
"""

import json
import os
import subprocess
import sys
import time


def _child():
    import numpy as np

    import carlemanlab._kernels as K
    from carlemanlab.fields import make_domain, make_grid, make_vector_field
    from carlemanlab.flow import compute_phi0
    from carlemanlab.fields import CoefficientSet, ScalarField

    rng = np.random.default_rng(0)
    n = 256
    u = rng.standard_normal((n, n))
    ax = rng.standard_normal((n, n))
    ay = rng.standard_normal((n, n))
    a0 = 0.5 + rng.random((n, n))
    p = rng.standard_normal((n, n))
    src = rng.standard_normal((n, n))

    def clock(fn, reps):
        fn()  # warmup (jit compilation on the compiled path)
        t0 = time.perf_counter()
        for _ in range(reps):
            fn()
        return (time.perf_counter() - t0) / reps * 1e3

    res = {"backend": K.backend()}
    res["step_fwd_2d_ms"] = clock(
        lambda: K.step_fwd_2d(u, ax, ay, a0, p, src, 1e-3, 0.01, 0.01), 100)
    res["step_adj_2d_ms"] = clock(
        lambda: K.step_adj_2d(u, ax, ay, a0, p, 1e-3, 0.01, 0.01), 100)

    dom = make_domain(2, [[-1.0, 1.0], [0.0, 1.0]], 1.0,
                      mask="half_disc", mask_params=(1.0,))
    grid = make_grid(dom, [65, 65], 5)
    cs = CoefficientSet(dom=dom, grid=grid, a0=ScalarField(name="one"),
                        A=make_vector_field(2, "half_disc_drift"),
                        p=ScalarField(name="zero"), R=ScalarField(name="one"),
                        rho=1.0)
    res["phi0_65x65_ms"] = clock(lambda: compute_phi0(cs, dom, grid), 3)
    print(json.dumps(res))


def main():
    rows = []
    for flag in ("1", "0"):
        env = dict(os.environ, CARLEMANLAB_NUMBA=flag, CARLEMANLAB_BENCH_CHILD="1")
        out = subprocess.run([sys.executable, __file__], env=env,
                             capture_output=True, text=True, check=True)
        rows.append(json.loads(out.stdout.strip().splitlines()[-1]))
    keys = [k for k in rows[0] if k != "backend"]
    width = max(len(k) for k in keys) + 2
    print(f"{'workload':<{width}}" + "".join(f"{r['backend']:>12}" for r in rows)
          + f"{'speedup':>10}")
    for k in keys:
        vals = [r[k] for r in rows]
        print(f"{k:<{width}}" + "".join(f"{v:>12.3f}" for v in vals)
              + f"{vals[1] / vals[0]:>9.1f}x")


if __name__ == "__main__":
    if os.environ.get("CARLEMANLAB_BENCH_CHILD"):
        _child()
    else:
        main()
