"""Timing comparison between the JIT-compiled kernels and the pure-Python
fallback.

Run `python -m pwpowers.bench`. The current process times whichever backend
it was imported with; when that backend is the JIT one, the script re-runs
itself in a subprocess with PWPOWERS_NO_NUMBA=1 to collect fallback numbers
and prints both with speedups. Workloads exercise the three hot paths:
occurrence scanning, bounded verification, and search.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from . import _kernels
from .search import SearchQuery, search_max_powers
from .verify import verify_theorem_sq_bound


def _random_word(n: int, k: int, hole_prob: float, rng) -> np.ndarray:
    letters = rng.integers(1, k + 1, size=n)
    holes = rng.random(n) < hole_prob
    return np.where(holes, 0, letters).astype(np.int8)


def _time(fn, repeats: int = 3) -> float:
    fn()  # warm up (JIT compile, caches)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _workloads():
    rng = np.random.default_rng(20240817)
    word = _random_word(140, 3, 0.3, rng)
    out = np.empty((_kernels.occurrence_capacity(word.size, 2), 2), np.int32)

    def scan_reference():
        _kernels.occurrence_scan(word, 2, out)

    def scan_sweep():
        _kernels.occurrence_scan_sweep(word, 2, out)

    def scan_roots():
        _kernels.occurrence_scan_by_roots(word, 3, 2, out)

    def verify_small():
        verify_theorem_sq_bound(2, 8)

    def search_deep():
        # t=2 keeps ~40k live nodes, so the DFS kernel dominates the timing
        search_max_powers(
            SearchQuery(exponent=3, alphabet_size=2, max_len=12, max_start_positions=2)
        )

    return [
        ("occurrence_scan n=140 r=2", scan_reference),
        ("occurrence_scan_sweep n=140 r=2", scan_sweep),
        ("occurrence_scan_by_roots n=140 r=2", scan_roots),
        ("verify theorem-sq k=2 maxLen=8", verify_small),
        ("search r=3 k=2 maxLen=12 t=2", search_deep),
    ]


def _measure() -> dict:
    return {name: _time(fn) for name, fn in _workloads()}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="python -m pwpowers.bench")
    parser.add_argument("--inner", action="store_true",
                        help="print raw timings as JSON (used by the subprocess hop)")
    args = parser.parse_args(argv)

    timings = _measure()
    if args.inner:
        print(json.dumps(timings))
        return 0

    backend = "numba" if _kernels.NUMBA_ENABLED else "python"
    other = None
    if _kernels.NUMBA_ENABLED:
        env = dict(os.environ, PWPOWERS_NO_NUMBA="1")
        proc = subprocess.run(
            [sys.executable, "-m", "pwpowers.bench", "--inner"],
            capture_output=True, text=True, env=env, check=True,
        )
        other = json.loads(proc.stdout)

    name_w = max(len(name) for name in timings)
    if other is None:
        print(f"backend: {backend} (set/unset PWPOWERS_NO_NUMBA to switch)")
        print(f"{'workload'.ljust(name_w)}  {'seconds':>10}")
        for name, sec in timings.items():
            print(f"{name.ljust(name_w)}  {sec:>10.6f}")
    else:
        print(f"{'workload'.ljust(name_w)}  {'numba':>10}  {'python':>10}  {'speedup':>8}")
        for name, sec in timings.items():
            psec = other[name]
            print(f"{name.ljust(name_w)}  {sec:>10.6f}  {psec:>10.6f}  {psec / sec:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
