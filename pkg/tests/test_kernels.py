"""Backend agreement: numba and numpy kernels against a direct
context-arithmetic reference."""

import numpy as np
import pytest

from eaqmds import kernels
from eaqmds.galois import build_field

FIELDS = [(2, 2), (3, 2), (5, 2), (2, 8)]


def ref_matmul(A, B, ctx):
    C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            s = 0
            for k in range(A.shape[1]):
                s = ctx.add(s, ctx.mul(int(A[i, k]), int(B[k, j])))
            C[i, j] = s
    return C


def ref_min_weight(G, ctx, alphabet):
    from itertools import product
    k, n = G.shape
    best = n + 1
    for msg in product(alphabet, repeat=k):
        if not any(msg):
            continue
        cw = [0] * n
        for mi, row in zip(msg, G):
            for c in range(n):
                cw[c] = ctx.add(cw[c], ctx.mul(int(mi), int(row[c])))
        w = sum(1 for v in cw if v)
        best = min(best, w)
    return best


@pytest.mark.parametrize("pm", FIELDS)
@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_matmul_matches_reference(pm, backend, backend_sandbox):
    ctx = build_field(*pm)
    rng = np.random.default_rng(7)
    kernels.set_backend(backend)
    for shape in [(3, 4, 5), (1, 6, 1), (8, 8, 8)]:
        A = rng.integers(0, ctx.order, (shape[0], shape[1])).astype(np.int64)
        B = rng.integers(0, ctx.order, (shape[1], shape[2])).astype(np.int64)
        assert np.array_equal(kernels.matmul(A, B, ctx), ref_matmul(A, B, ctx))


@pytest.mark.parametrize("pm", FIELDS)
def test_rank_backends_agree(pm, backend_sandbox):
    ctx = build_field(*pm)
    rng = np.random.default_rng(11)
    for _ in range(10):
        M = rng.integers(0, ctx.order, (6, 9)).astype(np.int64)
        kernels.set_backend("numba")
        r1 = kernels.rank(M, ctx)
        R1, _ = kernels.eliminate(M, ctx)
        kernels.set_backend("numpy")
        assert kernels.rank(M, ctx) == r1
        R2, _ = kernels.eliminate(M, ctx)
        assert np.array_equal(R1, R2)


def test_rank_known_cases(backend_sandbox):
    ctx = build_field(3, 2)
    for backend in ("numba", "numpy"):
        kernels.set_backend(backend)
        assert kernels.rank(np.zeros((3, 3), dtype=np.int64), ctx) == 0
        assert kernels.rank(np.eye(4, dtype=np.int64), ctx) == 4
        # duplicated row
        M = np.array([[1, 2, 3], [1, 2, 3], [0, 1, 0]], dtype=np.int64)
        assert kernels.rank(M, ctx) == 2


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_min_weight_matches_bruteforce(backend, backend_sandbox):
    ctx = build_field(3, 2)
    rng = np.random.default_rng(3)
    kernels.set_backend(backend)
    for _ in range(5):
        G = rng.integers(0, 9, (2, 5)).astype(np.int64)
        if kernels.rank(G, ctx) < 2:
            continue
        expected = ref_min_weight(G, ctx, range(9))
        assert kernels.min_weight(G, ctx) == expected
        # restricted alphabet: GF(3) inside GF(9)
        sub = np.array([a for a in range(9) if ctx.pow(a, 3) == a],
                       dtype=np.int64)
        assert kernels.min_weight(G, ctx, sub) == \
            ref_min_weight(G, ctx, sub.tolist())


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_first_singular_minor(backend, backend_sandbox):
    ctx = build_field(2, 2)
    kernels.set_backend(backend)
    # evaluations of {1, x} at the four distinct points of GF(4):
    # every 2x2 minor is a Vandermonde determinant, hence nonsingular
    G = np.array([[1, 1, 1, 1], [0, 1, 2, 3]], dtype=np.int64)
    assert kernels.first_singular_minor(G, ctx) == -1
    # duplicate an evaluation point: the (2,3) minor degenerates and
    # its lexicographic index is 5
    Gbad = np.array([[1, 1, 1, 1], [0, 1, 3, 3]], dtype=np.int64)
    assert kernels.first_singular_minor(Gbad, ctx) == 5
    assert kernels.first_singular_minor(Gbad, ctx, start_index=5) == 5


def test_pow_entries(gf16):
    rng = np.random.default_rng(5)
    M = rng.integers(0, 16, (4, 4)).astype(np.int64)
    P = kernels.pow_entries(M, 4, gf16)
    for i in range(4):
        for j in range(4):
            assert P[i, j] == gf16.pow(int(M[i, j]), 4)


def test_backend_selection(backend_sandbox):
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")
    kernels.set_backend("numpy")
    assert kernels.get_backend() == "numpy"


def test_kernels_require_tables():
    ctx = build_field(3, 2, tables=False)
    with pytest.raises(ValueError):
        kernels.rank(np.eye(2, dtype=np.int64), ctx)


def test_backend_env_flag():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c",
         "from eaqmds import kernels; print(kernels.get_backend())"],
        env={"PATH": "/usr/bin:/bin", "EAQMDS_BACKEND": "numpy"},
        capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
