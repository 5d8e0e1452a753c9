"""Exact arithmetic in finite fields GF(p^m).

Elements are stored as integers in [0, p^m): the base-p digits of the
integer are the coefficients (ascending degree) of the element's
polynomial representation over GF(p).  Small fields additionally carry
discrete-log tables, so multiplication reduces to index arithmetic;
large fields use polynomial arithmetic modulo the field's irreducible
modulus.  Both backends implement the same operation contract and the
test suite cross-checks them element-by-element on small fields.

The conjugation map a -> a^q backs the Hermitian inner product on
GF(q^2)^n (and its non-involutive analogue on GF(q^4)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_SIZE_LIMIT = 1 << 20   # hard ceiling on field order
DEFAULT_TABLE_LIMIT = 1 << 16  # above this, skip log tables


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q = p^e with p prime; raises if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fs[0]
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise ValueError(f"{q * p**e} is not a prime power")
    return p, e


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists ascending, not normalized
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for i in range(dm):
                a[shift + i] = (a[shift + i] - c * mod[i]) % p
        a.pop()
    return _poly_trim(a)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # reduce a mod b (b made monic on the fly)
        inv_lead = pow(b[-1], -1, p)
        bm = [(c * inv_lead) % p for c in b]
        a, b = b, _poly_mod(a, bm, p)
    return a


def _poly_powmod_x(e: int, mod: list[int], p: int) -> list[int]:
    """x^e mod `mod` by square-and-multiply."""
    result = [1]
    base = _poly_mod([0, 1], mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    if m == 1:
        return True
    # x^(p^m) == x (mod f)
    if _poly_powmod_x(p**m, coeffs, p) != [0, 1]:
        return False
    for ell in prime_factors(m):
        xk = _poly_powmod_x(p ** (m // ell), coeffs, p)
        diff = list(xk)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(coeffs, _poly_trim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Candidates are ordered by the high-to-low coefficient tuple
    (c_{m-1}, ..., c_0), i.e. by ascending value of the base-p encoding
    of the non-leading coefficients.
    """
    if m == 1:
        return (0, 1)  # x, giving GF(p) itself
    for lower in range(p**m):
        coeffs = _int_to_digits(lower, p, m) + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def _int_to_digits(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return out


def _digits_to_int(digits: list[int], p: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


class FieldContext:
    """A concrete GF(p^m) with fixed modulus and primitive element.

    Immutable after construction; all operations are pure functions of
    integer element codes, so a context is safe to share across threads.
    Obtain instances through :func:`build_field`.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...],
                 build_tables: bool):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = modulus
        self._mod_list = list(modulus)
        self.generator = self._find_generator()
        self.exp: np.ndarray | None = None
        self.log: np.ndarray | None = None
        if build_tables:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _find_generator(self) -> int:
        """Smallest element code of full multiplicative order."""
        target = self.order - 1
        if target == 1:
            return 1
        primes = prime_factors(target)
        for cand in range(2, self.order):
            if all(self._pow_poly(cand, target // ell) != 1 for ell in primes):
                return cand
        raise RuntimeError("no primitive element found")  # unreachable

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        val = 1
        for i in range(n):
            exp[i] = val
            log[val] = i
            val = self._mul_poly(val, self.generator)
        if val != 1:
            raise RuntimeError("generator does not have full order")
        exp[n:] = exp[:n]
        exp.setflags(write=False)
        log.setflags(write=False)
        self.exp, self.log = exp, log

    # -- polynomial-representation backend ------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        prod = _poly_mul(_int_to_digits(a, self.p, self.m),
                         _int_to_digits(b, self.p, self.m), self.p)
        return _digits_to_int(_poly_mod(prod, self._mod_list, self.p), self.p)

    def _pow_poly(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        e %= self.order - 1
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    def _inv_poly(self, a: int) -> int:
        return self._pow_poly(a, self.order - 2)

    # -- public arithmetic on element codes -----------------------------------

    @property
    def has_tables(self) -> bool:
        return self.exp is not None

    def check_code(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"element code {a} outside GF({self.order})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, s, pw = self.p, 0, 1
        for _ in range(self.m):
            s += ((a + b) % p) * pw
            a //= p
            b //= p
            pw *= p
        return s

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, s, pw = self.p, 0, 1
        for _ in range(self.m):
            s += ((-a) % p) * pw
            a //= p
            pw *= p
        return s

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.exp is None:
            return self._mul_poly(a, b)
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.exp is None:
            return self._inv_poly(a)
        return int(self.exp[(self.order - 1) - self.log[a]])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 0 if e else 1
        if self.exp is None:
            return self._pow_poly(a, e) if e >= 0 else \
                self._pow_poly(self._inv_poly(a), -e)
        return int(self.exp[(int(self.log[a]) * e) % (self.order - 1)])

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        e = self.order - 1
        for ell in prime_factors(e):
            while e % ell == 0 and self.pow(a, e // ell) == 1:
                e //= ell
        return e

    # -- misc -----------------------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, self.check_code(code))

    def elements(self) -> range:
        return range(self.order)

    def descriptor(self) -> dict:
        """Small serializable record pinning the field representation."""
        return {
            "p": self.p,
            "m": self.m,
            "order": self.order,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_int_to_digits(self.check_code(a), self.p, self.m))

    def __repr__(self) -> str:
        return f"GF({self.order})"


_FIELD_CACHE: dict[tuple, FieldContext] = {}


def build_field(p: int, m: int, modulus: list[int] | tuple[int, ...] | None = None,
                tables: bool | None = None,
                size_limit: int = DEFAULT_SIZE_LIMIT) -> FieldContext:
    """Construct (or fetch the cached) GF(p^m).

    `modulus` overrides the default lexicographically smallest monic
    irreducible; it must be monic of degree m over GF(p).  `tables`
    forces or suppresses log tables (default: build them when the
    order is at most DEFAULT_TABLE_LIMIT).
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree m={m} must be >= 1")
    if p**m > size_limit:
        raise ValueError(
            f"field order {p**m} exceeds the size ceiling {size_limit}")
    if modulus is None:
        mod = smallest_irreducible(p, m)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible(list(mod), p):
            raise ValueError(f"modulus {list(mod)} is reducible over GF({p})")
    build_tables = tables if tables is not None else p**m <= DEFAULT_TABLE_LIMIT
    key = (p, m, mod, build_tables)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        ctx = FieldContext(p, m, mod, build_tables)
        _FIELD_CACHE[key] = ctx
    return ctx


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific FieldContext; equality is code equality."""

    ctx: FieldContext
    code: int

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other)}")
        if other.ctx is not self.ctx:
            raise ValueError("elements from different field contexts")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.ctx, self.ctx.add(self.code, other.code))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.ctx, self.ctx.sub(self.code, other.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.ctx, self.ctx.mul(self.code, other.code))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.ctx, self.ctx.div(self.code, other.code))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        return f"{self.code}@GF({self.ctx.order})"


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch one of add/sub/mul/div on two elements of one field."""
    try:
        fn = {"add": a.__add__, "sub": a.__sub__,
              "mul": a.__mul__, "div": a.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return fn(b)


def _check_conj_compat(ctx: FieldContext, q: int) -> None:
    qp, qe = factor_prime_power(q)
    if qp != ctx.p or ctx.m % qe != 0:
        raise ValueError(
            f"conjugation exponent q={q} incompatible with GF({ctx.order})")


def conjugate(a: FieldElement, q: int) -> FieldElement:
    """a -> a^q; an involution on GF(q^2), order 4 on GF(q^4)."""
    _check_conj_compat(a.ctx, q)
    return FieldElement(a.ctx, a.ctx.pow(a.code, q))


def element_order(a: FieldElement) -> int:
    """Smallest e >= 1 with a^e = 1; divides p^m - 1."""
    return a.ctx.element_order(a.code)


@lru_cache(maxsize=None)
def splitting_field_degree(n: int, q: int) -> int:
    """Multiplicative order of q modulo n: degree over GF(q) where
    the n-th roots of unity live."""
    if n < 1:
        raise ValueError("n must be positive")
    import math
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd({n},{q}) != 1: no primitive n-th root of unity")
    e, acc = 1, q % n
    while acc != 1 % n:
        acc = (acc * q) % n
        e += 1
    return e
