"""Compare the compiled and numpy kick-drift-kick kernels.

    python benchmarks/bench_kernels.py [--steps 2000] [--sizes 500 2000 8000]
"""
import argparse
import time

import numpy as np

from csgordon import kernels
from csgordon.params import CsgParams
from csgordon.pde import EvolveConfig, Grid1D, _advance, cfl_dt, kink_state
from csgordon.solutions import SolutionSpec


def time_backend(backend, state, cfg, grid, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = _advance(state, cfg.dt, cfg.steps, cfg, grid, backend)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=2000)
    ap.add_argument("--sizes", type=int, nargs="+", default=[500, 2000, 8000])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    p = CsgParams.from_polar(1.0, 2.0, k=1.0, c=0.5)
    spec = SolutionSpec("A", p)
    names = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(names)}  (default: {kernels.BACKEND})")
    print(f"{'nodes':>7} {'steps':>6} " + " ".join(f"{n + ' [s]':>12}" for n in names)
          + f" {'speedup':>8} {'max|du|':>9}")
    for n in args.sizes:
        grid = Grid1D(-20, 20, n)
        cfg = EvolveConfig(cfl_dt(grid, p)[0], args.steps, p)
        state = kink_state(spec, grid)
        results = {name: time_backend(kernels.get_backend(name), state, cfg, grid, args.repeat)
                   for name in names}
        times = [results[name][0] for name in names]
        speed = results["python"][0] / results["cython"][0] if "cython" in results else float("nan")
        diff = (np.max(np.abs(results["python"][1].u - results["cython"][1].u))
                if "cython" in results else 0.0)
        print(f"{grid.x.size:>7} {args.steps:>6} " + " ".join(f"{t:>12.4f}" for t in times)
              + f" {speed:>8.1f} {diff:>9.1e}")


if __name__ == "__main__":
    main()
