"""Compare the compiled and pure-Python Freudenthal kernels.

Run with ``python benchmarks/bench_freudenthal.py``.
"""

import argparse
import time
from math import lcm

from smallk import _kernels_py, kernels
from smallk.reps import _dominant_weights, group_root_system

CASES = [
    ("Spin", 9, (2, 1, 0, 1)),
    ("Spin", 10, (1, 1, 0, 1, 1)),
    ("SU", 6, (2, 1, 0, 1, 2)),
    ("Sp", 5, (1, 0, 1, 0, 1)),
    ("Spin", 16, (1, 0, 0, 0, 0, 0, 1, 0)),
]


def _inputs(group, n, labels):
    rs = group_root_system(group, n)
    gram = rs.label_gram
    den = lcm(*(x.denominator for row in gram for x in row))
    gram_int = [[int(x * den) for x in row] for row in gram]
    return rs.rank, rs.cartan_matrix, rs.positive_labels, gram_int, _dominant_weights(rs, labels)


def _time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernel not available; only the fallback will be timed")
    print(f"{'irrep':32s} {'dominants':>9s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for group, n, labels in CASES:
        inp = _inputs(group, n, labels)
        name = f"{group}({n}) {labels}"
        tp, ref = _time(_kernels_py.freudenthal_dominant, inp, args.repeat)
        if kernels.BACKEND == "cython":
            tc, out = _time(kernels.freudenthal_dominant, inp, args.repeat)
            assert out == ref, "kernels disagree"
            print(f"{name:32s} {len(inp[4]):9d} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:32s} {len(inp[4]):9d} {tp:11.4f} {'-':>11s}")


if __name__ == "__main__":
    main()
