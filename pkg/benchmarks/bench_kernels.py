"""Compare the compiled and pure-Python refinement kernels.

Usage: python3 benchmarks/bench_kernels.py [--m 6] [--repeat 3]

Both backends compute the full refinement matrix over all cells of the
complex on ``m`` elements; the outputs are checked for equality.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cyclop import _kernels_py
from cyclop.complex import build_complex

try:
    from cyclop import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None


def best_of(fn, repeat: int) -> tuple[float, np.ndarray]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--rows", type=int, default=None,
                    help="limit the pure-Python run to this many fine rows")
    args = ap.parse_args()

    codes = build_complex(args.m).codes
    fines = codes if args.rows is None else codes[: args.rows]
    pairs = len(fines) * len(codes)
    print(f"m={args.m}: {len(codes)} cells, {pairs} label pairs")

    t_py, ref_py = best_of(lambda: _kernels_py.refinement_matrix(fines, codes), args.repeat)
    print(f"python  {t_py * 1e3:10.2f} ms  {pairs / t_py:14,.0f} pairs/s")
    if _kernels_cy is None:
        print("cython  not built")
        return
    t_cy, ref_cy = best_of(lambda: _kernels_cy.refinement_matrix(fines, codes), args.repeat)
    print(f"cython  {t_cy * 1e3:10.2f} ms  {pairs / t_cy:14,.0f} pairs/s")
    assert np.array_equal(np.asarray(ref_py), np.asarray(ref_cy)), "backends disagree"
    print(f"speedup {t_py / t_cy:.1f}x, outputs identical")


if __name__ == "__main__":
    main()
