"""Time the numba and numpy backends of the mod-p kernels against each other.

    python3 benchmarks/bench_kernels.py [--n 6] [--p 3] [--repeat 5]

Each kernel is run once per backend before timing so numba compile time is
excluded; the outputs of the two backends are compared for equality.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from grpder import _kernels
from grpder.derivation import obstruction_matrix
from grpder.field import FieldSpec
from grpder.group import GroupParams


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(n: int, p: int):
    params = GroupParams(n)
    table = np.ascontiguousarray(params.cayley_table)
    rng = np.random.default_rng(0)
    obstruction = np.ascontiguousarray(obstruction_matrix(params, FieldSpec(p)), dtype=np.int64)
    square = rng.integers(0, p, size=(16 * n, 16 * n), dtype=np.int64)
    left = rng.integers(0, params.order, size=64 * n, dtype=np.int64)
    right = rng.integers(0, params.order, size=64 * n, dtype=np.int64)
    x = rng.integers(0, p, size=params.order, dtype=np.int64)
    y = rng.integers(0, p, size=params.order, dtype=np.int64)
    return {
        f"rref obstruction {obstruction.shape}": ("rref_mod_p", (obstruction, np.int64(p))),
        f"rref random {square.shape}": ("rref_mod_p", (square, np.int64(p))),
        f"two_sided_index {left.size} x {params.order}": ("two_sided_index", (table, left, right)),
        f"convolve dense {params.order}": ("convolve_mod_p", (table, x, y, np.int64(p))),
    }


def same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(u, v) for u, v in zip(a, b))
    return np.array_equal(a, b)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = sorted(_kernels.IMPLEMENTATIONS)
    print(f"n={args.n} p={args.p} backends={backends} (active: {_kernels.BACKEND})")
    print(f"{'kernel':<36}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}  equal")
    for label, (name, call_args) in workloads(args.n, args.p).items():
        times, outs = {}, {}
        for b in backends:
            fn = _kernels.IMPLEMENTATIONS[b][name]
            outs[b] = fn(*call_args)  # warm-up / compile
            times[b] = best_of(lambda: fn(*call_args), args.repeat)
        speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        equal = all(same(outs[backends[0]], outs[b]) for b in backends)
        print(f"{label:<36}" + "".join(f"{times[b] * 1e3:>10.3f}ms" for b in backends) + f"{speed:>9.1f}x  {equal}")


if __name__ == "__main__":
    main()
