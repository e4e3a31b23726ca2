"""Compare the numba and pure-numpy kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is warmed up once (so JIT compilation is excluded), then timed
as the best of ``--repeat`` runs.  Results from both paths are checked to be
identical before timing is reported.
"""

from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from circuitrank import _kernels
from circuitrank.f2 import BinaryMatrix
from circuitrank.exact import build_matrix
from circuitrank.families import cycle, random_graph


def f2_case(n: int, rng: np.random.Generator):
    m = BinaryMatrix.from_dense(rng.integers(0, 2, (n, n), dtype=np.uint8))

    def run(fn):
        work = m.data.copy()
        return len(fn(work, m.cols, False))

    return run


def modp_case(n: int, k: int):
    import random

    g = random_graph(random.Random(n), n, 0.3) if n != 200 else cycle(200)
    p = _kernels.MODP
    mat = np.array(build_matrix(g, "L"), dtype=np.int64) % p
    scales = np.ones(k, dtype=np.int64)
    shifts = np.arange(k, dtype=np.int64) % p

    def run(fn):
        return tuple(int(x) for x in fn(mat, scales, shifts, p))

    return run


def bench(label, run, fast, slow, repeat):
    a, b = run(fast), run(slow)
    if a != b:
        sys.exit(f"{label}: numba and numpy disagree ({a} vs {b})")
    t_fast = min(timeit.repeat(lambda: run(fast), number=1, repeat=repeat))
    t_slow = min(timeit.repeat(lambda: run(slow), number=1, repeat=repeat))
    print(f"{label:<28} {t_fast * 1e3:>10.2f} {t_slow * 1e3:>10.2f} {t_slow / t_fast:>8.1f}x")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<28} {'numba ms':>10} {'numpy ms':>10} {'speedup':>9}")
    for n in (64, 256, 1024, 2048):
        bench(f"f2 rank {n}x{n}", f2_case(n, rng), _kernels.f2_eliminate_numba, _kernels.f2_eliminate_numpy,
              args.repeat)
    for n, k in ((8, 17), (16, 33), (40, 20), (200, 5)):
        bench(f"mod-p nullities n={n} k={k}", modp_case(n, k), _kernels.modp_nullities_numba,
              _kernels.modp_nullities_numpy, args.repeat)


if __name__ == "__main__":
    main()
