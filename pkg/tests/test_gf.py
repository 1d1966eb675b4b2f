"""Field construction, scalar arithmetic, tables, and bulk kernels."""

import random

import numpy as np
import pytest

from rscodec import Field, find_primitive
from rscodec import gf

from .util import get_field, slow_gf2m_mul

SMALL_Q = (3, 4, 5, 7, 8)
ALL_SUPPORTED_LE_256 = sorted(
    [q for q in range(3, 257) if gf._is_prime(q)]
    + [4, 8, 16, 32, 64, 128, 256])


# ----- construction and validation -------------------------------------------

def test_rejects_gf2():
    with pytest.raises(ValueError):
        Field(2)


@pytest.mark.parametrize("q", [0, 1, 6, 9, 10, 12, 100, 65522, 65537, 2 ** 17])
def test_rejects_unsupported_sizes(q):
    # 9 = 3^2 is a prime power but not prime or 2^m; 65537 is prime but
    # beyond the supported range; 2^17 exceeds the binary degree limit.
    with pytest.raises(ValueError):
        Field(q)


def test_accepts_extreme_supported_sizes():
    assert Field(3).q == 3
    assert Field(65521).q == 65521
    assert Field(2 ** 16).q == 65536


def test_default_reduction_gf256_is_0x11d():
    assert Field(256).reduction == 0x11D


@pytest.mark.parametrize("m", sorted(gf.DEFAULT_REDUCTIONS))
def test_default_reductions_are_irreducible(m):
    mask = gf.DEFAULT_REDUCTIONS[m]
    assert gf._gf2_is_irreducible(mask, m)
    # and degree exactly m with nonzero constant term
    assert mask.bit_length() - 1 == m and mask & 1


def test_rejects_reducible_reduction():
    # x^8 + 1 = (x + 1)^8 over GF(2)
    with pytest.raises(ValueError):
        Field(256, reduction=0x101)


def test_rejects_wrong_degree_reduction():
    with pytest.raises(ValueError):
        Field(256, reduction=0x13)


def test_rejects_reduction_for_prime_field():
    with pytest.raises(ValueError):
        Field(7, reduction=0x11D)


def test_rejects_non_primitive_alpha():
    # 2 has order 3 in F_7; 6 has order 2.
    with pytest.raises(ValueError):
        Field(7, alpha=2)
    with pytest.raises(ValueError):
        Field(7, alpha=6)
    with pytest.raises(ValueError):
        Field(7, alpha=0)
    with pytest.raises(ValueError):
        Field(7, alpha=7)


# ----- F_7 fixtures -----------------------------------------------------------

def test_f7_scalar_fixtures(f7):
    assert f7.add(4, 5) == 2
    assert f7.sub(1, 2) == 6
    assert f7.mul(3, 5) == 1
    assert f7.mul(5, 5) == 4
    assert f7.pow(5, 3) == 6
    assert f7.pow(5, 6) == 1
    assert f7.neg(3) == 4


def test_f7_powers_of_alpha(f7):
    assert f7.exp == [1, 5, 4, 6, 2, 3]
    assert f7.pow(5, 0) == 1


def test_f7_inverses_against_exhaustive_search(f7):
    for a in range(1, 7):
        expected = next(b for b in range(1, 7) if a * b % 7 == 1)
        assert f7.inv(a) == expected
        assert f7.mul(a, f7.inv(a)) == 1
    assert f7.inv(5) == 3
    assert f7.inv(2) == 4


def test_f7_dlog(f7):
    assert f7.dlog(1) == 0
    assert f7.dlog(5) == 1
    assert f7.dlog(2) == 4
    assert f7.dlog(3) == 5
    with pytest.raises(ValueError):
        f7.dlog(0)


def test_zero_division_contracts(f7):
    with pytest.raises(ZeroDivisionError):
        f7.inv(0)
    with pytest.raises(ZeroDivisionError):
        f7.div(3, 0)
    with pytest.raises(ZeroDivisionError):
        f7.pow(0, -1)
    assert f7.div(0, 3) == 0
    assert f7.pow(0, 0) == 1
    assert f7.pow(0, 5) == 0


def test_pow_negative_exponents(f7):
    assert f7.pow(5, -1) == f7.inv(5)
    assert f7.pow(5, -3) == f7.inv(f7.pow(5, 3))


# ----- primitive elements ------------------------------------------------------

def test_find_primitive_f7_is_3():
    assert find_primitive(7) == 3
    assert Field(7).alpha == 3


def test_is_primitive(f7):
    assert f7.is_primitive(5)
    assert f7.is_primitive(3)
    assert not f7.is_primitive(2)
    assert not f7.is_primitive(1)
    assert not f7.is_primitive(0)


@pytest.mark.parametrize("q", [5, 11, 13, 16, 17, 64, 256])
def test_smallest_primitive_is_smallest(q):
    f = get_field(q)
    alpha = f.alpha
    # definition check: powers 0..q-2 of alpha are pairwise distinct
    powers = {f.pow(alpha, i) for i in range(q - 1)}
    assert len(powers) == q - 1
    # nothing smaller generates the group
    for x in range(2, alpha):
        seen = set()
        acc = 1
        for _ in range(q - 1):
            acc = f.mul(acc, x)
            seen.add(acc)
        assert len(seen) < q - 1, f"{x} also generates GF({q})*"


# ----- axioms -------------------------------------------------------------------

@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    f = get_field(q)
    elems = range(q)
    for a in elems:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in elems:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.sub(a, b) == f.add(a, f.neg(b))
            for c in elems:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", [13, 251, 256, 65521, 65536])
def test_field_axioms_random_triples(q):
    f = get_field(q)
    rng = random.Random(0xA0 + q)
    for _ in range(10_000):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.mul(a, b) == f.mul(b, a)
        if a:
            assert f.mul(a, f.inv(a)) == 1
            assert f.div(b, a) == f.mul(b, f.inv(a))


@pytest.mark.parametrize("q", ALL_SUPPORTED_LE_256)
def test_fermat_exhaustive_up_to_256(q):
    f = get_field(q)
    for x in range(1, q):
        assert f.pow(x, q - 1) == 1


@pytest.mark.parametrize("q", [7, 17, 256, 4096, 65521, 65536])
def test_tables_are_inverse_bijections(q):
    f = get_field(q)
    assert len(f.exp) == q - 1
    assert sorted(f.exp) == list(range(1, q))
    for x in range(1, q):
        assert f.exp[f.log[x]] == x


def test_gf256_exhaustive_inverse_roundtrip():
    f = get_field(256)
    for x in range(1, 256):
        assert f.mul(x, f.inv(x)) == 1


def test_gf256_mul_matches_carry_free_oracle():
    f = get_field(256)
    rng = random.Random(7)
    for _ in range(5000):
        a, b = rng.randrange(256), rng.randrange(256)
        assert f.mul(a, b) == slow_gf2m_mul(a, b, 0x11D, 8)


def test_gf16_full_mul_table_matches_oracle():
    f = get_field(16)
    for a in range(16):
        for b in range(16):
            assert f.mul(a, b) == slow_gf2m_mul(a, b, f.reduction, 4)


# ----- bulk kernels -------------------------------------------------------------

@pytest.mark.parametrize("q", [7, 17, 256, 65521, 65536])
def test_array_kernels_match_scalar_ops(q):
    f = get_field(q)
    rng = random.Random(q)
    x = np.array([rng.randrange(q) for _ in range(64)], dtype=np.int64)
    y = np.array([rng.randrange(q) for _ in range(64)], dtype=np.int64)
    s = rng.randrange(q)
    assert f.add_arr(x, y).tolist() == [f.add(a, b) for a, b in zip(x, y)]
    assert f.sub_arr(x, y).tolist() == [f.sub(a, b) for a, b in zip(x, y)]
    assert f.neg_arr(x).tolist() == [f.neg(a) for a in x]
    assert f.mul_arr(x, y).tolist() == [f.mul(a, b) for a, b in zip(x, y)]
    assert f.scale_arr(x, s).tolist() == [f.mul(a, s) for a in x]
    assert f.scale_arr(x, 0).tolist() == [0] * 64


@pytest.mark.parametrize("q", [7, 13, 256])
def test_eval_at_powers_matches_horner(q):
    from rscodec import Poly
    f = get_field(q)
    rng = random.Random(q * 3)
    n = q - 1
    for _ in range(25):
        deg = rng.randrange(n)
        coeffs = [rng.randrange(q) for _ in range(deg + 1)]
        p = Poly(f, coeffs)
        for first, count in ((0, n), (1, n), (1, 3), (2, n), (0, 0)):
            got = f.eval_at_powers(coeffs, first=first, count=count)
            want = [p(f.pow(f.alpha, (first + i) % n)) for i in range(count)]
            assert got.tolist() == want


def test_eval_at_powers_large_field_fallback_path():
    # q - 1 > the power-matrix limit, so the Horner-across-points path runs.
    from rscodec import Poly
    f = get_field(65521)
    rng = random.Random(11)
    coeffs = [rng.randrange(65521) for _ in range(30)]
    p = Poly(f, coeffs)
    got = f.eval_at_powers(coeffs, first=5, count=40)
    want = [p(f.pow(f.alpha, 5 + i)) for i in range(40)]
    assert got.tolist() == want


def test_eval_at_powers_rejects_overlong_coefficients(f7):
    with pytest.raises(ValueError):
        f7.eval_at_powers([1] * 7, first=0, count=6)


def test_asarray_validates_range(f7):
    with pytest.raises(ValueError):
        f7.asarray([0, 7])
    with pytest.raises(ValueError):
        f7.asarray([-1])


def test_check_validates(f7):
    assert f7.check(6) == 6
    with pytest.raises(ValueError):
        f7.check(7)
    with pytest.raises(ValueError):
        f7.check(-1)
    with pytest.raises(ValueError):
        f7.check(2.5)


# ----- multiplication counter ----------------------------------------------------

def test_mul_counter_scalar(f7):
    before = gf.mul_ops_total()
    f7.mul(3, 4)
    f7.inv(3)
    f7.div(4, 2)
    f7.pow(5, 4)
    assert gf.mul_ops_total() == before + 4


def test_mul_counter_context_and_kernels(f7):
    with gf.MulOpCounter() as ctr:
        f7.mul_arr(np.arange(6, dtype=np.int64), np.arange(6, dtype=np.int64))
    assert ctr.count == 6
    with gf.MulOpCounter() as ctr:
        f7.eval_at_powers([1, 2, 3], first=0, count=6)
    assert ctr.count == 6 * 3


def test_field_equality_and_hash():
    assert get_field(7, alpha=5) == Field(7, alpha=5)
    assert get_field(7, alpha=5) != Field(7, alpha=3)
    assert hash(Field(7, alpha=5)) == hash(Field(7, alpha=5))
