import pytest

from eaqmds.galois import (
    build_field,
    conjugate,
    element_order,
    factor_prime_power,
    field_arith,
    is_prime,
    prime_factors,
    smallest_irreducible,
    splitting_field_degree,
)


def test_build_field_orders(gf16, gf9, gf256):
    assert gf16.order == 16 and gf16.order - 1 == 15
    assert gf9.order == 9  # F_{q^2} for q = 3
    assert gf256.order == 256


def test_splitting_field_for_17th_roots():
    # ord_17(16) = 2, so the 17th roots of unity over GF(16) live in GF(256)
    assert pow(16, 1, 17) != 1 and pow(16, 2, 17) == 1
    assert splitting_field_degree(17, 16) == 2
    f = build_field(2, 8)
    assert (f.order - 1) % 17 == 0


def test_build_field_errors():
    with pytest.raises(ValueError):
        build_field(4, 1)  # not prime
    with pytest.raises(ValueError):
        build_field(6, 2)
    with pytest.raises(ValueError):
        build_field(2, 0)
    with pytest.raises(ValueError):
        build_field(2, 21)  # 2^21 above the size ceiling
    build_field(2, 21, size_limit=1 << 22, tables=False)  # raised ceiling ok


def test_modulus_validation():
    with pytest.raises(ValueError):
        build_field(2, 4, modulus=[1, 0, 0, 0, 1])  # x^4+1 reducible
    with pytest.raises(ValueError):
        build_field(2, 4, modulus=[1, 1, 1])  # wrong degree
    alt = build_field(5, 2, modulus=[3, 0, 1])
    assert alt.modulus == (3, 0, 1)
    assert alt.element_order(alt.generator) == 24


def test_field_arith_examples(gf9):
    g = gf9.element(gf9.generator)
    one = gf9.element(1)
    zero = gf9.element(0)
    for a in map(gf9.element, gf9.elements()):
        assert field_arith(a, one, "mul") == a
        assert field_arith(a, -a, "add") == zero
    # g * g^7 = 1 since g^8 = 1 by Lagrange
    assert g * g**7 == one
    with pytest.raises(ValueError):
        field_arith(g, one, "xor")


def test_cross_context_is_error(gf9, gf16):
    with pytest.raises(ValueError):
        field_arith(gf9.element(1), gf16.element(1), "add")


def test_division(gf16):
    for a in range(1, 16):
        for b in range(1, 16):
            q = gf16.div(a, b)
            assert gf16.mul(q, b) == a
    with pytest.raises(ZeroDivisionError):
        gf16.div(3, 0)


def test_conjugate_examples(gf9, gf16):
    # zero fixed; involution on GF(q^2)
    assert conjugate(gf9.element(0), 3).code == 0
    for ctx, q in [(gf9, 3), (gf16, 4)]:
        for a in map(ctx.element, ctx.elements()):
            assert conjugate(conjugate(a, q), q) == a
    # on GF(q^4) the q-conjugation has order 4, not 2
    f81 = build_field(3, 4)
    a = f81.element(f81.generator)
    twice = conjugate(conjugate(a, 3), 3)
    assert twice != a
    four = conjugate(conjugate(twice, 3), 3)
    assert four == a
    with pytest.raises(ValueError):
        conjugate(gf9.element(1), 2)  # wrong characteristic


def test_element_order(gf9, gf25):
    assert element_order(gf9.element(1)) == 1
    assert element_order(gf9.element(gf9.generator)) == 8
    g = gf25.element(gf25.generator)
    for t in (2, 3, 4, 6, 8, 12, 24):
        assert element_order(g ** ((25 - 1) // t)) == t
    with pytest.raises(ValueError):
        element_order(gf25.element(0))


@pytest.mark.parametrize("p,m,q", [(2, 4, 4), (3, 2, 3), (2, 8, 16)])
def test_frobenius_is_ring_homomorphism(p, m, q):
    ctx = build_field(p, m)
    els = list(ctx.elements())
    for a in els:
        for b in els:
            ab = ctx.mul(a, b)
            s = ctx.add(a, b)
            assert ctx.pow(ab, q) == ctx.mul(ctx.pow(a, q), ctx.pow(b, q))
            assert ctx.pow(s, q) == ctx.add(ctx.pow(a, q), ctx.pow(b, q))


@pytest.mark.parametrize("p,m", [(2, 4), (3, 2), (5, 2), (7, 2)])
def test_unit_group_order(p, m):
    ctx = build_field(p, m)
    for a in range(1, ctx.order):
        assert ctx.pow(a, ctx.order - 1) == 1


@pytest.mark.parametrize("p,m", [(3, 2), (2, 4), (5, 2), (3, 4)])
def test_table_and_polynomial_backends_agree(p, m):
    with_tables = build_field(p, m, tables=True)
    poly_only = build_field(p, m, tables=False)
    assert not poly_only.has_tables and with_tables.has_tables
    assert with_tables.generator == poly_only.generator
    for a in range(p**m):
        for b in range(p**m):
            assert with_tables.mul(a, b) == poly_only.mul(a, b)
            assert with_tables.add(a, b) == poly_only.add(a, b)
        if a:
            assert with_tables.inv(a) == poly_only.inv(a)
            assert with_tables.pow(a, 7) == poly_only.pow(a, 7)


def test_smallest_irreducible_known_values():
    assert smallest_irreducible(2, 4) == (1, 1, 0, 0, 1)   # x^4+x+1
    assert smallest_irreducible(3, 2) == (1, 0, 1)         # x^2+1
    mod = smallest_irreducible(5, 2)
    assert mod[-1] == 1 and len(mod) == 3


def test_descriptor(gf9):
    d = gf9.descriptor()
    assert d == {"p": 3, "m": 2, "order": 9, "modulus": [1, 0, 1],
                 "generator": gf9.generator}


def test_prime_helpers():
    assert is_prime(2) and is_prime(27 // 9) and not is_prime(1)
    assert prime_factors(24) == [2, 3]
    assert factor_prime_power(27) == (3, 3)
    with pytest.raises(ValueError):
        factor_prime_power(12)


def test_build_field_caching():
    assert build_field(3, 2) is build_field(3, 2)
    assert build_field(3, 2) is not build_field(3, 2, tables=False)
