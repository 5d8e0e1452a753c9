import pytest

from eaqmds.algebra import Matrix
from eaqmds.codes import constacyclic_code, constacyclic_context
from eaqmds.cosets import DefiningSet, cyclotomic_coset, defining_set
from eaqmds.eaqecc import (
    FAMILIES,
    EaqeccParams,
    build_classical,
    canonical_deltas,
    derive_eaqecc,
    ea_singleton_check,
    ebit_count,
    ebit_count_symplectic,
    enumerate_family,
)
from eaqmds.galois import build_field


def test_ebit_count_dual_containing_is_zero():
    ctx = constacyclic_context(4, 17, 1)
    z1 = (cyclotomic_coset(1, 17, 16).elements
          | cyclotomic_coset(2, 17, 16).elements)
    H = constacyclic_code(ctx, DefiningSet(17, 1, z1)).H
    assert ebit_count(H, 4) == 0


def test_ebit_count_one_for_small_cyclic():
    ctx = constacyclic_context(2, 5, 1)
    H = constacyclic_code(ctx, defining_set("i", 2, delta=1)).H
    assert ebit_count(H, 2) == 1


def test_ebit_count_t_for_constacyclic():
    ctx = constacyclic_context(11, 40, 3)
    Z = defining_set("v", 11, t=3, delta1=4, delta2=4)
    H = constacyclic_code(ctx, Z).H
    assert ebit_count(H, 11) == 3


def test_symplectic_equal_matrices_give_zero():
    for q in (2, 3):
        ctx = build_field(q, 1)
        H = Matrix(ctx, [[1, 0, 1], [0, 1, 1]])
        assert ebit_count_symplectic(H, H, q) == 0


def test_symplectic_hand_example():
    # HX = (1 0; 0 0), HZ = (0 0; 1 0) over GF(2):
    # HX HZ^T + HZ HX^T = (0 1; 1 0), rank 2, c = 1
    gf2 = build_field(2, 1)
    HX = Matrix(gf2, [[1, 0], [0, 0]])
    HZ = Matrix(gf2, [[0, 0], [1, 0]])
    assert ebit_count_symplectic(HX, HZ, 2) == 1


def test_symplectic_css_pair_needs_no_entanglement():
    gf3 = build_field(3, 1)
    HX = Matrix(gf3, [[1, 2, 0, 0]])
    HZ = Matrix(gf3, [[0, 0, 1, 1]])
    assert ebit_count_symplectic(HX, HZ, 3) == 0
    with pytest.raises(ValueError):
        ebit_count_symplectic(HX, Matrix(gf3, [[1, 0]]), 3)
    with pytest.raises(ValueError):
        ebit_count_symplectic(HX, HZ, 9)


def test_derive_17_8_6():
    code = build_classical("i", 4, 6)
    params = derive_eaqecc(code, 4)
    assert params.label() == "[[17,8,6;1]]_4"
    assert params.saturates_ea_singleton


def test_derive_24_17_5():
    code = build_classical("iii", 5, 5)
    assert (code.n, code.k) == (24, 20)   # |Z| = 4, asymmetric set
    params = derive_eaqecc(code, 5)
    assert params.label() == "[[24,17,5;1]]_5"


def test_derive_dual_containing_reduces_to_stabilizer():
    ctx = constacyclic_context(4, 17, 1)
    z1 = (cyclotomic_coset(1, 17, 16).elements
          | cyclotomic_coset(2, 17, 16).elements)
    code = constacyclic_code(ctx, DefiningSet(17, 1, z1))
    params = derive_eaqecc(code, 4)
    assert params.c == 0
    assert params.k == 2 * code.k - code.n  # [[n, 2k-n, d; 0]]
    assert not params.saturates_ea_singleton


def test_ea_singleton_check():
    ok = EaqeccParams(q=4, n=17, k=8, d=6, c=1, saturates_ea_singleton=True)
    assert ea_singleton_check(ok)
    trivial = EaqeccParams(q=3, n=5, k=5, d=1, c=0,
                           saturates_ea_singleton=True)
    assert ea_singleton_check(trivial)
    ex4 = EaqeccParams(q=5, n=12, k=6, d=5, c=2, saturates_ea_singleton=True)
    assert ea_singleton_check(ex4)
    loose = EaqeccParams(q=4, n=17, k=9, d=3, c=0,
                         saturates_ea_singleton=False)
    assert not ea_singleton_check(loose)
    with pytest.raises(ValueError):
        ea_singleton_check(EaqeccParams(q=2, n=5, k=6, d=2, c=0,
                                        saturates_ea_singleton=False))


PUBLISHED_EXAMPLES = {
    ("i", 4, None): ["[[17,16,2;1]]_4", "[[17,12,4;1]]_4",
                     "[[17,8,6;1]]_4", "[[17,4,8;1]]_4"],
    ("ii", 5, None): ["[[25,16,6;1]]_5", "[[25,14,7;1]]_5",
                      "[[25,12,8;1]]_5", "[[25,10,9;1]]_5"],
    ("iv", 5, None): ["[[12,6,5;2]]_5", "[[12,4,6;2]]_5", "[[12,2,7;2]]_5"],
    ("v", 11, 3): ["[[40,25,10;3]]_11", "[[40,23,11;3]]_11",
                   "[[40,21,12;3]]_11", "[[40,19,13;3]]_11",
                   "[[40,17,14;3]]_11"],
}


@pytest.mark.parametrize("key", sorted(PUBLISHED_EXAMPLES, key=str))
def test_enumerate_family_golden(key):
    family, q, t = key
    labels = [p.label() for p in enumerate_family(family, q, t)]
    assert labels == PUBLISHED_EXAMPLES[key]


def test_enumerate_family_iii_contains_published_codes():
    labels = [p.label() for p in enumerate_family("iii", 5)]
    for want in ["[[24,17,5;1]]_5", "[[24,15,6;1]]_5",
                 "[[24,13,7;1]]_5", "[[24,11,8;1]]_5"]:
        assert want in labels


def test_enumerate_admissibility_errors():
    with pytest.raises(ValueError):
        enumerate_family("v", 7, 3)    # 3 does not divide 8
    with pytest.raises(ValueError):
        enumerate_family("iv", 4)      # even q
    with pytest.raises(ValueError):
        enumerate_family("v", 11, None)
    with pytest.raises(ValueError):
        enumerate_family("i", 6)       # not a prime power


def test_enumerate_general_divisor_length():
    # the n | q^2+1 theorem admits any divisor, e.g. n = 10 for q = 3
    labels = [p.label() for p in enumerate_family("i", 3, n=10)]
    assert labels == ["[[10,9,2;1]]_3", "[[10,5,4;1]]_3", "[[10,1,6;1]]_3"]


@pytest.mark.parametrize("family,q,t", [
    ("i", 2, None), ("i", 3, None), ("i", 4, None), ("i", 5, None),
    ("ii", 2, None), ("ii", 3, None), ("ii", 4, None), ("ii", 5, None),
    ("iii", 3, None), ("iii", 4, None), ("iii", 5, None),
    ("iv", 3, None), ("iv", 5, None), ("iv", 7, None),
    ("v", 5, 3), ("v", 9, 5),
])
def test_family_invariants(family, q, t):
    """Closed form, saturation and defining-set consumption across a grid."""
    spec = FAMILIES[family]
    params = enumerate_family(family, q, t)
    assert [p.d for p in params] == spec.d_values(q, t)
    for p in params:
        assert ea_singleton_check(p)
        assert p.n + p.c - p.k == 2 * (p.d - 1)
        assert p.k == spec.closed_form_k(q, p.d, t)
        assert p.c == spec.expected_c(t)
        n_cl, k_cl, d_cl = p.classical
        assert d_cl == p.d
        if p.defining_set is not None:
            assert len(p.defining_set) == n_cl - k_cl
            assert p.d == len(p.defining_set) + 1


def test_canonical_deltas_cover_ranges():
    for q in (5, 7, 9, 11, 13):
        for d in FAMILIES["iv"].d_values(q):
            kw = canonical_deltas("iv", q, d)
            assert 0 <= kw["delta1"] <= (q - 1) // 2 - 1
            assert (q + 1) // 2 <= kw["delta2"] <= q - 1
            assert kw["delta1"] + kw["delta2"] == d - 2
    for q, t in ((5, 3), (11, 3), (19, 5)):
        lo = (t - 1) * (q + 1) // (2 * t)
        hi = (t + 1) * (q + 1) // (2 * t) - 2
        for d in FAMILIES["v"].d_values(q, t):
            kw = canonical_deltas("v", q, d, t)
            assert lo <= kw["delta1"] <= hi and lo <= kw["delta2"] <= hi


def test_derive_k_negative_is_error():
    code = build_classical("ii", 3, 5)
    code2 = type(code)(n=code.n, k=1, d_design=1, H=code.H, q=3)
    with pytest.raises(ValueError):
        derive_eaqecc(code2, 3)


def test_record_schema():
    rec = enumerate_family("iv", 5)[0].to_record()
    assert rec["family"] == "iv" and rec["q"] == 5
    assert rec["classical"] == {"n": 12, "k": 8, "d": 5}
    assert rec["saturated"] is True
    assert rec["defining_set"] == [1, 3, 5, 23]
    assert rec["field"]["order"] == 25
