"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import os
import time

import numpy as np

from lieinv import _accel
from lieinv.abelian import commuting_adjacency
from lieinv.liecore import build_family


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases(rng: np.random.Generator):
    mats = rng.integers(-50, 50, size=(200, 24, 24))
    yield "rank 24x24 (x200)", lambda: [_accel.rank_mod_p(m) for m in mats]
    stack = rng.integers(-50, 50, size=(500, 12, 12))
    yield "batch rank 12x12 (x500)", lambda: _accel.batch_rank_mod_p(stack)
    for spec in ("strict_upper(6)", "upper(5)", "heisenberg(8)"):
        L = build_family(spec)
        adj = commuting_adjacency(L)
        yield f"commuting subset {spec} (n={L.dim})", lambda adj=adj, n=L.dim: _accel.best_commuting_subset(adj, n)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        print("numba is not installed; only the numpy path can run")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<40} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, fn in cases(rng):
        os.environ["LIEINV_NUMBA"] = "1"
        fn()  # compile
        fast = _best_of(fn, args.repeat) if _accel.numba_enabled() else float("nan")
        os.environ["LIEINV_NUMBA"] = "0"
        slow = _best_of(fn, args.repeat)
        print(f"{name:<40} {fast:>10.4f} {slow:>10.4f} {slow / fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
