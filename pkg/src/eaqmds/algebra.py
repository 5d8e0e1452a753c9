"""Dense matrices and polynomials over a FieldContext.

Matrix entries are integer element codes in a numpy int64 array; the
heavy operations (products, elimination) go through the kernels module
when the field has log tables and fall back to context arithmetic
otherwise.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .galois import FieldContext, FieldElement, _check_conj_compat


class Matrix:
    """Immutable dense matrix over one field context."""

    def __init__(self, ctx: FieldContext, data) -> None:
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix data must be 2-D")
        if arr.size and (arr.min() < 0 or arr.max() >= ctx.order):
            raise ValueError("entry outside the field's code range")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        self.ctx = ctx
        self.data = arr

    @classmethod
    def zeros(cls, ctx: FieldContext, rows: int, cols: int) -> "Matrix":
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldContext, n: int) -> "Matrix":
        return cls(ctx, np.eye(n, dtype=np.int64))

    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[FieldElement]]) -> "Matrix":
        ctx = rows[0][0].ctx
        for row in rows:
            for e in row:
                if e.ctx is not ctx:
                    raise ValueError("elements from different field contexts")
        return cls(ctx, [[e.code for e in row] for row in rows])

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.ctx, int(self.data[i, j]))

    def row(self, i: int) -> "Matrix":
        return Matrix(self.ctx, self.data[i: i + 1])

    def is_zero(self) -> bool:
        return not self.data.any()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and other.ctx is self.ctx
                and np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((id(self.ctx), self.data.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over GF({self.ctx.order}))"

    def dump(self) -> str:
        """Debug grid: log indices ('-' for zero), or coefficient tuples
        when the field carries no log table."""
        lines = []
        for i in range(self.nrows):
            cells = []
            for j in range(self.ncols):
                v = int(self.data[i, j])
                if self.ctx.has_tables:
                    cells.append("-" if v == 0 else str(int(self.ctx.log[v])))
                else:
                    cells.append(str(self.ctx.coeffs(v)))
            lines.append(" ".join(cells))
        return "\n".join(lines)


def _same_ctx(A: Matrix, B: Matrix) -> FieldContext:
    if A.ctx is not B.ctx:
        raise ValueError("matrices over different field contexts")
    return A.ctx


# -- pure-python fallbacks for tableless (large) fields -----------------------

def _py_matmul(A: np.ndarray, B: np.ndarray, ctx: FieldContext) -> np.ndarray:
    rows, inner = A.shape
    cols = B.shape[1]
    C = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        for k in range(inner):
            a = int(A[i, k])
            if not a:
                continue
            for j in range(cols):
                b = int(B[k, j])
                if b:
                    C[i, j] = ctx.add(int(C[i, j]), ctx.mul(a, b))
    return C


def _py_eliminate(M: np.ndarray, ctx: FieldContext) -> tuple[np.ndarray, int]:
    M = M.copy()
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i, c]), None)
        if pivot is None:
            continue
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]
        inv = ctx.inv(int(M[r, c]))
        for j in range(c, cols):
            M[r, j] = ctx.mul(int(M[r, j]), inv)
        for i in range(rows):
            if i != r and M[i, c]:
                f = ctx.neg(int(M[i, c]))
                for j in range(c, cols):
                    if M[r, j]:
                        M[i, j] = ctx.add(int(M[i, j]), ctx.mul(f, int(M[r, j])))
        r += 1
        if r == rows:
            break
    return M, r


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    ctx = _same_ctx(A, B)
    if A.ncols != B.nrows:
        raise ValueError(f"dimension mismatch: {A.shape} @ {B.shape}")
    if ctx.has_tables:
        return Matrix(ctx, kernels.matmul(A.data, B.data, ctx))
    return Matrix(ctx, _py_matmul(A.data, B.data, ctx))


def hermitian_adjoint(M: Matrix, q: int) -> Matrix:
    """Conjugate transpose under a -> a^q."""
    _check_conj_compat(M.ctx, q)
    if M.ctx.has_tables:
        conj = kernels.pow_entries(M.data, q, M.ctx)
    else:
        conj = np.array([[M.ctx.pow(int(v), q) for v in row]
                         for row in M.data], dtype=np.int64).reshape(M.shape)
    return Matrix(M.ctx, conj.T)


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    if M.ctx.has_tables:
        R, r = kernels.eliminate(M.data, M.ctx)
    else:
        R, r = _py_eliminate(M.data, M.ctx)
    pivots = []
    for i in range(r):
        nz = np.nonzero(R[i])[0]
        pivots.append(int(nz[0]))
    return Matrix(M.ctx, R), tuple(pivots)


def matrix_rank(M: Matrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if M.ctx.has_tables:
        return kernels.rank(M.data, M.ctx)
    return _py_eliminate(M.data, M.ctx)[1]


def nullspace_basis(H: Matrix) -> Matrix:
    """Rows form a basis of {v : H v^T = 0}; cols(H) - rank(H) rows."""
    n = H.ncols
    if H.nrows == 0:
        return Matrix.identity(H.ctx, n)
    R, pivots = rref(H)
    ctx = H.ctx
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for i, pc in enumerate(pivots):
            basis[bi, pc] = ctx.neg(int(R.data[i, f]))
    return Matrix(ctx, basis)


class Polynomial:
    """Polynomial over one field context; coefficients ascending."""

    def __init__(self, ctx: FieldContext, coeffs: Iterable[int]) -> None:
        cs = [ctx.check_code(int(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x: FieldElement | int) -> FieldElement:
        code = x.code if isinstance(x, FieldElement) else self.ctx.check_code(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.ctx.add(self.ctx.mul(acc, code), c)
        return FieldElement(self.ctx, acc)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if other.ctx is not self.ctx:
            raise ValueError("polynomials over different field contexts")
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.ctx, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = self.ctx.add(out[i + j], self.ctx.mul(a, b))
        return Polynomial(self.ctx, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and other.ctx is self.ctx
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)} over GF({self.ctx.order}))"


def poly_from_roots(roots: Sequence[FieldElement],
                    ctx: FieldContext | None = None) -> Polynomial:
    """Monic polynomial prod (x - r); the empty product is 1 (needs ctx)."""
    if roots:
        ctx = roots[0].ctx
        for r in roots:
            if r.ctx is not ctx:
                raise ValueError("roots from different field contexts")
    elif ctx is None:
        raise ValueError("empty root list needs an explicit field context")
    poly = Polynomial(ctx, [1])
    for r in roots:
        poly = poly * Polynomial(ctx, [ctx.neg(r.code), 1])
    return poly
