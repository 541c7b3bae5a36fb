#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the pure-Python twin.

Runs the full brute-force walk (every model visited once) for both backends
over a range of color counts and both theories, and prints wall times plus
the speedup. The compiled extension must have been built for the comparison
(`python setup.py build_ext --inplace`); otherwise only the pure timings run.

Usage: python benchmarks/bench_kernel.py [--k-max 8] [--repeat 3]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from homcount import _countwalk_py  # noqa: E402

try:
    from homcount import _countwalk
except ImportError:
    _countwalk = None


def best_time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-max", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _countwalk is None:
        print("compiled kernel not built; timing the pure backend only", file=sys.stderr)

    header = f"{'walk':<31} {'models':>12} {'pure (s)':>10}"
    if _countwalk:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    for constrained, label in ((True, "constrained"), (False, "unconstrained")):
        for k in range(args.k_max + 1):
            models = _countwalk_py.count_models(k, constrained)
            pure = best_time(_countwalk_py.count_models, k, constrained, repeat=args.repeat)
            line = f"count_models k={k:<2} {label:<13} {models:>12} {pure:>10.4f}"
            if _countwalk:
                assert _countwalk.count_models(k, constrained) == models
                fast = best_time(_countwalk.count_models, k, constrained, repeat=args.repeat)
                line += f" {fast:>13.4f} {pure / fast if fast else float('inf'):>7.1f}x"
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
