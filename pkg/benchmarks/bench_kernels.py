#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends on representative loads.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from eaqmds import kernels
from eaqmds.algebra import hermitian_adjoint
from eaqmds.codes import generator_matrix
from eaqmds.eaqecc import build_classical
from eaqmds.galois import build_field


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    gf169 = build_field(13, 2)
    rng = np.random.default_rng(1)
    A = rng.integers(0, 169, (84, 84)).astype(np.int64)
    B = rng.integers(0, 169, (84, 84)).astype(np.int64)

    code_i = build_classical("i", 4, 8)        # [17,10] over GF(256)
    G_minor = generator_matrix(code_i)
    code_ii = build_classical("ii", 3, 4)      # [9,6] over GF(9), 9^6 msgs
    G_enum = generator_matrix(code_ii)

    code_iv = build_classical("iv", 13, 19)
    H = code_iv.H
    Hd = hermitian_adjoint(H, 13)

    return [
        ("matmul 84x84 GF(169)",
         lambda: kernels.matmul(A, B, gf169)),
        ("gram+rank family iv q=13",
         lambda: kernels.rank(kernels.matmul(H.data, Hd.data, H.ctx), H.ctx)),
        ("min_weight 9^6 GF(9)",
         lambda: kernels.min_weight(G_enum.data, G_enum.ctx)),
        ("minors C(17,10) GF(256)",
         lambda: kernels.first_singular_minor(G_minor.data, G_minor.ctx)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    loads = workloads()
    results = {}
    for backend in ("numba", "numpy"):
        kernels.set_backend(backend)
        for name, fn in loads:
            fn()  # warm up (JIT compile on the numba side)
            results[(backend, name)] = timeit(fn, args.repeats)

    width = max(len(n) for n, _ in loads)
    print(f"{'workload':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for name, _ in loads:
        nb = results[("numba", name)]
        np_ = results[("numpy", name)]
        print(f"{name:<{width}}  {nb * 1e3:>8.2f}ms  {np_ * 1e3:>8.2f}ms  "
              f"{np_ / nb:>7.1f}x")


if __name__ == "__main__":
    main()
