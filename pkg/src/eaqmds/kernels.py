"""Hot numeric kernels over table-backed finite fields.

Matrices are 2-D int64 arrays of element codes; a field is described by
(p, m, exp, log) where exp/log are the context's discrete-log tables.
Every kernel exists twice: a numba @njit version and a pure-numpy
fallback.  The active backend is chosen by the EAQMDS_BACKEND
environment variable ("numba" or "numpy"; default numba when it
imports).  benchmarks/bench_kernels.py compares the two.

Addition in GF(p^m) is digit-wise mod p on the base-p encoding, so an
array sum along an axis is a digit-wise modular sum; the numpy paths
lean on that.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f
        return wrap if not (args and callable(args[0])) else args[0]


_backend = os.environ.get("EAQMDS_BACKEND", "numba" if HAVE_NUMBA else "numpy")
if _backend not in ("numba", "numpy"):
    raise ValueError(f"EAQMDS_BACKEND must be 'numba' or 'numpy', got {_backend!r}")
if _backend == "numba" and not HAVE_NUMBA:
    _backend = "numpy"


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    _backend = name


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

@njit(cache=True, inline="always")
def _nb_add(a, b, p, m):
    if p == 2:
        return a ^ b
    s = 0
    pw = 1
    for _ in range(m):
        s += ((a + b) % p) * pw
        a //= p
        b //= p
        pw *= p
    return s


@njit(cache=True, inline="always")
def _nb_neg(a, p, m):
    if p == 2:
        return a
    s = 0
    pw = 1
    for _ in range(m):
        s += ((-a) % p) * pw
        a //= p
        pw *= p
    return s


@njit(cache=True, inline="always")
def _nb_mul(a, b, exp, log):
    if a == 0 or b == 0:
        return np.int64(0)
    return exp[log[a] + log[b]]


@njit(cache=True)
def _nb_matmul(A, B, exp, log, p, m):
    rows, inner = A.shape
    cols = B.shape[1]
    C = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        for k in range(inner):
            a = A[i, k]
            if a == 0:
                continue
            la = log[a]
            for j in range(cols):
                b = B[k, j]
                if b != 0:
                    C[i, j] = _nb_add(C[i, j], exp[la + log[b]], p, m)
    return C


@njit(cache=True)
def _nb_eliminate(M, exp, log, p, m, Q):
    """In-place forward elimination; returns rank. Pivot = first nonzero."""
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        pivot = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            for j in range(cols):
                t = M[r, j]
                M[r, j] = M[pivot, j]
                M[pivot, j] = t
        linv = (Q - 1) - log[M[r, c]]
        for j in range(c, cols):
            M[r, j] = _nb_mul(M[r, j], exp[linv % (Q - 1)], exp, log)
        for i in range(rows):
            if i != r and M[i, c] != 0:
                f = _nb_neg(M[i, c], p, m)
                lf = log[f]
                for j in range(c, cols):
                    v = M[r, j]
                    if v != 0:
                        M[i, j] = _nb_add(M[i, j], exp[lf + log[v]], p, m)
        r += 1
        if r == rows:
            break
    return r


@njit(cache=True)
def _nb_min_weight(G, alphabet, exp, log, p, m):
    """Minimum Hamming weight over nonzero alphabet^k message combinations.

    Odometer enumeration with incremental codeword updates: advancing a
    message digit adds (new - old) * row to the running codeword.
    """
    k, n = G.shape
    A = alphabet.shape[0]
    delta = np.empty(A, dtype=np.int64)  # alphabet[v+1 (mod A)] - alphabet[v]
    for v in range(A):
        delta[v] = _nb_add(alphabet[(v + 1) % A],
                           _nb_neg(alphabet[v], p, m), p, m)
    digits = np.zeros(k, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int64)
    best = n + 1
    total = 1
    for _ in range(k):
        total *= A
    for _ in range(total - 1):
        j = 0
        while digits[j] == A - 1:
            d = delta[A - 1]
            ld = log[d]
            for c in range(n):
                g = G[j, c]
                if g != 0:
                    cw[c] = _nb_add(cw[c], exp[ld + log[g]], p, m)
            digits[j] = 0
            j += 1
        d = delta[digits[j]]
        if d != 0:
            ld = log[d]
            for c in range(n):
                g = G[j, c]
                if g != 0:
                    cw[c] = _nb_add(cw[c], exp[ld + log[g]], p, m)
        digits[j] += 1
        w = 0
        for c in range(n):
            if cw[c] != 0:
                w += 1
        if 0 < w < best:
            best = w
    return best


@njit(cache=True)
def _nb_first_singular_minor(G, exp, log, p, m, Q, start_index):
    """Index of the first singular k x k column-minor in lexicographic
    order, or -1 if all C(n, k) minors are nonsingular."""
    k, n = G.shape
    idx = np.empty(k, dtype=np.int64)
    for i in range(k):
        idx[i] = i
    # fast-forward to start_index combinations from the beginning
    count = 0
    sub = np.empty((k, k), dtype=np.int64)
    while True:
        if count >= start_index:
            for j in range(k):
                col = idx[j]
                for i in range(k):
                    sub[i, j] = G[i, col]
            if _nb_eliminate(sub, exp, log, p, m, Q) < k:
                return count
        count += 1
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            return np.int64(-1)
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def _np_add_arrays(a, b, p, m):
    if p == 2:
        return a ^ b
    out = np.zeros_like(a + b)
    pw = 1
    for _ in range(m):
        out += ((a // pw + b // pw) % p) * pw
        pw *= p
    return out


def _np_neg_array(a, p, m):
    if p == 2:
        return a.copy()
    out = np.zeros_like(a)
    pw = 1
    for _ in range(m):
        out += ((-(a // pw)) % p) * pw
        pw *= p
    return out


def _np_sum_field(x, axis, p, m):
    """Field sum along an axis: digit-wise modular sum of codes."""
    if p == 2:
        return np.bitwise_xor.reduce(x, axis=axis)
    out = np.zeros(np.sum(x, axis=axis).shape, dtype=np.int64)
    pw = 1
    for _ in range(m):
        out += (np.sum((x // pw) % p, axis=axis) % p) * pw
        pw *= p
    return out


def _np_scale_row(row, factor, exp, log):
    """factor * row, vectorized through the log table."""
    if factor == 0:
        return np.zeros_like(row)
    out = np.zeros_like(row)
    nz = row != 0
    out[nz] = exp[log[row[nz]] + log[factor]]
    return out


def _np_matmul(A, B, exp, log, p, m):
    rows, inner = A.shape
    cols = B.shape[1]
    la = np.where(A != 0, log[A], -1)
    lb = np.where(B != 0, log[B], -1)
    prod_log = la[:, :, None] + lb[None, :, :]
    prod = np.where((la[:, :, None] >= 0) & (lb[None, :, :] >= 0),
                    exp[np.maximum(prod_log, 0)], 0)
    return _np_sum_field(prod.reshape(rows, inner, cols), 1, p, m)


def _np_eliminate(M, exp, log, p, m, Q):
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]
        inv = exp[(Q - 1) - log[M[r, c]]]
        M[r] = _np_scale_row(M[r], int(inv), exp, log)
        col = M[:, c].copy()
        col[r] = 0
        rows_nz = np.nonzero(col)[0]
        if rows_nz.size:
            factors = _np_neg_array(col[rows_nz], p, m)
            upd = np.zeros((rows_nz.size, cols), dtype=np.int64)
            frow = M[r]
            fnz = frow != 0
            upd[:, fnz] = exp[log[factors][:, None] + log[frow[fnz]][None, :]]
            M[rows_nz] = _np_add_arrays(M[rows_nz], upd, p, m)
        r += 1
        if r == rows:
            break
    return r


def _np_min_weight(G, alphabet, exp, log, p, m, chunk=1 << 14):
    k, n = G.shape
    A = alphabet.shape[0]
    total = A**k
    best = n + 1
    lG = np.where(G != 0, log[G], -1)
    for lo in range(1, total, chunk):
        hi = min(lo + chunk, total)
        ids = np.arange(lo, hi, dtype=np.int64)
        digits = np.empty((hi - lo, k), dtype=np.int64)
        for j in range(k):
            digits[:, j] = ids % A
            ids //= A
        msgs = alphabet[digits]
        lm = np.where(msgs != 0, log[msgs], -1)
        prod_log = lm[:, :, None] + lG[None, :, :]
        prod = np.where((lm[:, :, None] >= 0) & (lG[None, :, :] >= 0),
                        exp[np.maximum(prod_log, 0)], 0)
        cw = _np_sum_field(prod, 1, p, m)
        w = np.count_nonzero(cw, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def _np_first_singular_minor(G, exp, log, p, m, Q, start_index):
    from itertools import combinations, islice
    k, n = G.shape
    for count, cols in enumerate(
            islice(combinations(range(n), k), start_index, None),
            start=start_index):
        sub = np.ascontiguousarray(G[:, cols])
        if _np_eliminate(sub, exp, log, p, m, Q) < k:
            return count
    return -1


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _field_args(ctx):
    if ctx.exp is None:
        raise ValueError(
            f"kernels need log tables; GF({ctx.order}) was built without them")
    return ctx.exp, ctx.log, ctx.p, ctx.m, ctx.order


def matmul(A: np.ndarray, B: np.ndarray, ctx) -> np.ndarray:
    exp, log, p, m, _ = _field_args(ctx)
    if _backend == "numba":
        return _nb_matmul(np.ascontiguousarray(A), np.ascontiguousarray(B),
                          exp, log, p, m)
    return _np_matmul(A, B, exp, log, p, m)


def eliminate(M: np.ndarray, ctx) -> tuple[np.ndarray, int]:
    """Reduced row echelon form (copy) and rank."""
    exp, log, p, m, Q = _field_args(ctx)
    work = np.ascontiguousarray(M.copy())
    if _backend == "numba":
        r = int(_nb_eliminate(work, exp, log, p, m, Q))
    else:
        r = _np_eliminate(work, exp, log, p, m, Q)
    return work, r


def rank(M: np.ndarray, ctx) -> int:
    return eliminate(M, ctx)[1]


def min_weight(G: np.ndarray, ctx, alphabet: np.ndarray | None = None) -> int:
    """Exact minimum Hamming weight of the span of G's rows, messages
    drawn from `alphabet` (default: the whole field)."""
    exp, log, p, m, _ = _field_args(ctx)
    if alphabet is None:
        alphabet = np.arange(ctx.order, dtype=np.int64)
    else:
        alphabet = np.asarray(alphabet, dtype=np.int64)
    if _backend == "numba":
        return int(_nb_min_weight(np.ascontiguousarray(G), alphabet,
                                  exp, log, p, m))
    return _np_min_weight(G, alphabet, exp, log, p, m)


def first_singular_minor(G: np.ndarray, ctx, start_index: int = 0) -> int:
    """Lexicographic index of the first singular k x k minor, -1 if none.
    `start_index` allows resuming a long enumeration."""
    exp, log, p, m, Q = _field_args(ctx)
    if _backend == "numba":
        return int(_nb_first_singular_minor(
            np.ascontiguousarray(G), exp, log, p, m, Q,
            np.int64(start_index)))
    return _np_first_singular_minor(G, exp, log, p, m, Q, start_index)


def pow_entries(M: np.ndarray, e: int, ctx) -> np.ndarray:
    """Entrywise M^e (used for the conjugation a -> a^q)."""
    exp, log, *_ = _field_args(ctx)
    out = np.zeros_like(M)
    nz = M != 0
    out[nz] = exp[(log[M[nz]] * e) % (ctx.order - 1)]
    return out
