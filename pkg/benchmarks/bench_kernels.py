"""Compare the numba and numpy symmetry kernels.

Usage: python benchmarks/bench_kernels.py [--max-x 8] [--max-y 7]

Times the raw kernel over every census pattern (presence arrays prepared up
front) and then the end-to-end census for each backend.
"""

import argparse
import time
from collections import Counter

from hitofrieze import _kernels
from hitofrieze.classify import _candidate_arrays, classify
from hitofrieze.pattern import FriezePattern
from hitofrieze.word import words_up_to


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-x", type=int, default=8)
    ap.add_argument("--max-y", type=int, default=7)
    args = ap.parse_args()

    patterns = [FriezePattern(x, y) for x in words_up_to(args.max_x) for y in words_up_to(args.max_y, 2)]
    jobs = [(p.presence_arrays, _candidate_arrays(p.period)[1:]) for p in patterns]
    print(f"{len(patterns)} patterns, module default backend: {_kernels.BACKEND}")

    backends = ["numpy"] + (["numba"] if _kernels.symmetry_mask_numba is not None else [])
    if "numba" in backends:
        (V, H), cand = jobs[0]
        _kernels.symmetry_mask(V, H, *cand, backend="numba")  # JIT warm-up

    kernel_times, labels = {}, {}
    for b in backends:
        t0 = time.perf_counter()
        total = 0
        for (V, H), cand in jobs:
            total += int(_kernels.symmetry_mask(V, H, *cand, backend=b).sum())
        kernel_times[b] = time.perf_counter() - t0
        print(f"kernel  {b:6s} {kernel_times[b]:8.2f} s   ({total} symmetries found)")

    for b in backends:
        t0 = time.perf_counter()
        labels[b] = Counter(classify(p, backend=b).label for p in patterns)
        print(f"census  {b:6s} {time.perf_counter() - t0:8.2f} s   ({len(labels[b])} labels)")

    if len(backends) == 2:
        assert labels["numpy"] == labels["numba"], "backends disagree"
        print(f"kernel speedup numba/numpy: {kernel_times['numpy'] / kernel_times['numba']:.1f}x")


if __name__ == "__main__":
    main()
