"""Times the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from toriclat import kernels  # noqa: E402
from toriclat.interleaving import build_interleaver  # noqa: E402
from toriclat.lattice import TorusLattice  # noqa: E402


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    if kernels.compiled is None:
        print("compiled kernels are not built; run "
              "`python setup.py build_ext --inplace` first")
        return 1

    jobs = []
    for q in (7, 9):
        mapping = build_interleaver(TorusLattice(q))
        jobs.append((f"burst_exhaustive q={q} ({q * q * 3 ** q} cases)",
                     "burst_exhaustive",
                     (q, mapping.shape.cells, mapping.block_grid)))
    for q, trials in ((13, 20_000),):
        mapping = build_interleaver(TorusLattice(q))
        args = (q, mapping.shape.cells, mapping.block_grid, 7, 0, trials, 1)
        jobs.append((f"simulate_trials q={q} ({trials} trials, "
                     "uniform-cluster)", "simulate_trials", args))

    print(f"{'kernel':<48} {'pure [s]':>10} {'compiled [s]':>13} {'speedup':>8}")
    for label, name, args in jobs:
        t_pure, r_pure = timed(getattr(kernels.pure, name), *args)
        t_comp, r_comp = timed(getattr(kernels.compiled, name), *args)
        if r_pure != r_comp:
            print(f"{label:<48} BACKENDS DISAGREE: {r_pure} vs {r_comp}")
            return 1
        print(f"{label:<48} {t_pure:>10.4f} {t_comp:>13.4f} "
              f"{t_pure / t_comp:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
