"""Benchmark the compiled Jacobi kernel against the pure-Python fallback.

Runs both kernels on the same random Hermitian matrices, checks they agree
with each other and with numpy, and prints a timing table.

    python3 benchmarks/bench_eigensolver.py --dims 8 16 32 64 128 --repeats 3
"""

import argparse
import time

import numpy as np

from qreduce import _jacobi_py

try:
    from qreduce import _jacobi
except ImportError:
    _jacobi = None

TARGET = 1e-14
MAX_SWEEPS = 60


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (g + g.conj().T)


def run_kernel(kernel, matrices) -> tuple[float, float, float]:
    """(best wall time over the batch, worst eigenvalue gap vs numpy, worst recon)."""
    start = time.perf_counter()
    worst_gap = 0.0
    worst_recon = 0.0
    for m in matrices:
        w, v, ok = kernel.jacobi_eigh(m, TARGET, MAX_SWEEPS)
        if not ok:
            raise RuntimeError("kernel failed to converge")
        worst_gap = max(worst_gap, np.max(np.abs(np.sort(w) - np.linalg.eigvalsh(m))))
        worst_recon = max(worst_recon, np.max(np.abs((v * w) @ v.conj().T - m)))
    return time.perf_counter() - start, worst_gap, worst_recon


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", type=int, nargs="+", default=[8, 16, 32, 64, 128])
    parser.add_argument("--batch", type=int, default=5, help="matrices per dimension")
    parser.add_argument("--repeats", type=int, default=3, help="timing repeats, best kept")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    kernels = [("python", _jacobi_py)]
    if _jacobi is not None:
        kernels.insert(0, ("compiled", _jacobi))
    else:
        print("compiled kernel not available; benchmarking the fallback only")

    rng = np.random.default_rng(args.seed)
    print(f"{'dim':>5} {'kernel':>9} {'best time':>12} {'per matrix':>12} "
          f"{'eig gap':>10} {'recon':>10}")
    speedups = []
    for dim in args.dims:
        matrices = [random_hermitian(rng, dim) for _ in range(args.batch)]
        times = {}
        for name, kernel in kernels:
            best = np.inf
            gap = recon = 0.0
            for _ in range(args.repeats):
                elapsed, gap, recon = run_kernel(kernel, matrices)
                best = min(best, elapsed)
            times[name] = best
            print(f"{dim:>5} {name:>9} {best:>11.4f}s {best / args.batch:>11.5f}s "
                  f"{gap:>10.2e} {recon:>10.2e}")
        if len(times) == 2:
            ratio = times["python"] / times["compiled"]
            speedups.append(ratio)
            print(f"{'':>5} {'speedup':>9} {ratio:>11.1f}x")
    if speedups:
        print(f"\ngeometric-mean speedup: {np.exp(np.mean(np.log(speedups))):.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
