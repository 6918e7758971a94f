import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz import (
    QQ,
    ZZ,
    HSeries,
    NotInvertibleError,
    PrecisionError,
    RingMismatchError,
    SeriesClass,
    add,
    basis,
    classify,
    derive,
    eps,
    exp,
    integrate,
    invert,
    mul,
    ord,
    scalar_mul,
    sin_series,
)
from hurwitz.checks import random_series, random_unit_series
from hurwitz.series import Order, linear_combination

from conftest import ALL_RINGS, MOD7, ring_and_series
from oracles import hurwitz_product


def S(*coeffs, ring=ZZ):
    return HSeries(ring, coeffs)


class TestAdd:
    def test_zero(self):
        assert add(S(1, 2, 3), S(0, 0, 0)) == S(1, 2, 3)

    def test_negation(self, ring):
        f = HSeries(ring, [1, 2, 3, 4])
        assert (f + (-f)).is_zero()

    def test_truncates_to_shorter(self):
        assert add(S(1, 1), S(1, 2, 5)) == S(2, 3)

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            add(S(1), S(1, ring=QQ))


class TestMul:
    def test_basis_product(self):
        assert mul(S(0, 1, 0, 0, 0), S(0, 0, 1, 0, 0)) == S(0, 0, 0, 3, 0)

    def test_identity(self, ring):
        f = HSeries(ring, [3, 1, 4, 1, 5])
        assert mul(f, HSeries.one(ring, 5)) == f

    def test_ones_squared(self):
        # c(2) = C(2,0) + C(2,1) + C(2,2)
        assert mul(S(1, 1, 1), S(1, 1, 1)) == S(1, 2, 4)

    def test_against_direct_convolution(self, ring):
        rng = random.Random(5)
        for _ in range(50):
            f, g = random_series(rng, ring, 12), random_series(rng, ring, 12)
            want = [ring.normalize(c) for c in hurwitz_product(f.coeffs, g.coeffs)]
            assert mul(f, g).to_list() == want

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            mul(S(1), S(1, ring=MOD7))


def test_derive_examples():
    assert derive(basis(4, 6, ZZ)) == basis(3, 5, ZZ)
    assert derive(S(5, 0, 0)).is_zero()
    assert derive(S(0, 1, 0, -1, 0)) == S(1, 0, -1, 0)
    with pytest.raises(PrecisionError):
        derive(HSeries(ZZ, []))


def test_integrate_examples():
    for m in range(4):
        for n in range(4):
            assert integrate(basis(m, m + 1, ZZ), n) == basis(m + n, m + n + 1, ZZ)
    f = S(1, 2, 3)
    assert integrate(f, 0) == f
    assert integrate(S(1, 1), 2) == S(0, 0, 1, 1)


def test_basis_examples():
    assert basis(0, 3, ZZ) == S(1, 0, 0)
    assert basis(2, 4, ZZ) == S(0, 0, 1, 0)
    with pytest.raises(PrecisionError):
        basis(1, 1, ZZ)


def test_ord():
    for n in range(6):
        assert ord(basis(n, 8, ZZ)) == n
    z = HSeries.zero(ZZ, 5)
    assert ord(z).is_infinite
    assert ord(z) == math.inf
    assert ord(z).precision == 5
    assert ord(z) > 10**9
    assert ord(S(0, 0, 3)) < ord(z)
    with pytest.raises(OverflowError):
        int(ord(z))


@given(ring_and_series())
def test_ord_of_integral(data):
    _, f = data
    if not ord(f).is_infinite:
        assert ord(integrate(f)) == int(ord(f)) + 1


def test_eps():
    assert eps(S(1, 0, 0)) == 1
    assert eps(sin_series(8, ZZ)) == 0
    with pytest.raises(PrecisionError):
        eps(HSeries(ZZ, []))


@given(ring_and_series(count=2))
def test_eps_is_multiplicative(data):
    R, f, g = data
    assert eps(mul(f, g)) == R.mul(eps(f), eps(g))


def test_classify():
    assert classify(exp(sin_series(8, ZZ))) is SeriesClass.H1
    assert classify(S(2, 0)) is SeriesClass.HDIAMOND
    assert classify(HSeries(QQ, [2, 0])) is SeriesClass.HSTAR
    assert classify(HSeries(MOD7, [3])) is SeriesClass.HSTAR
    assert classify(S(-1)) is SeriesClass.HSTAR
    assert classify(HSeries.zero(ZZ, 3)) is SeriesClass.H0


def test_invert_examples():
    assert invert(HSeries.one_bar(ZZ, 8)) == S(1, -1, 1, -1, 1, -1, 1, -1)
    assert invert(S(1, 0, 0)) == S(1, 0, 0)
    assert invert(exp(sin_series(10, ZZ))) == S(1, -1, 1, 0, -3, 8, -3, -56, 217, -64)


def test_invert_rejects_non_units():
    with pytest.raises(NotInvertibleError, match="invertible iff"):
        invert(S(2, 1))
    with pytest.raises(NotInvertibleError):
        invert(HSeries(MOD7, [0, 1]))


@pytest.mark.parametrize("R", ALL_RINGS, ids=repr)
def test_invert_round_trip(R):
    rng = random.Random(99)
    for _ in range(200):
        f = random_unit_series(rng, R, rng.randint(1, 16))
        assert mul(f, invert(f)) == HSeries.one(R, f.precision)


def test_scalar_mul(ring):
    f = HSeries(ring, [1, 2, 3, 4])
    assert scalar_mul(0, f).is_zero()
    assert scalar_mul(1, f) == f
    a = ring.convert(3)
    assert scalar_mul(a, f) == mul(HSeries.constant(a, ring, 4), f)


@settings(max_examples=60)
@given(ring_and_series(count=3, size=16))
def test_ring_axioms(data):
    _, f, g, h = data
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, g) == mul(g, f)
    assert mul(f, g + h) == mul(f, g) + mul(f, h)
    assert (f + g) + h == f + (g + h)


@given(ring_and_series(count=2))
def test_derivation(data):
    _, f, g = data
    assert derive(mul(f, g)).equal_at(mul(derive(f), g) + mul(f, derive(g)))


@given(ring_and_series(count=2))
def test_rota_baxter_weight_zero(data):
    _, f, g = data
    If, Ig = integrate(f), integrate(g)
    assert mul(If, Ig).equal_at(integrate(mul(f, Ig)) + integrate(mul(If, g)))


@given(ring_and_series())
def test_derive_integrate(data):
    _, f = data
    assert derive(integrate(f)) == f


def test_integrate_derive_on_basis():
    for k in range(1, 10):
        b = basis(k, 12, ZZ)
        assert integrate(derive(b)) == b


def test_basis_products_all_pairs():
    for m in range(13):
        for n in range(13):
            P = m + n + 1
            assert mul(basis(m, P, ZZ), basis(n, P, ZZ)) == scalar_mul(math.comb(m + n, m), basis(m + n, P, ZZ))


@given(ring_and_series(), st.integers(0, 10))
def test_basis_times_series(data, m):
    R, f = data
    prod = mul(basis(m, f.precision + m + 1, R), f)
    for k in range(prod.precision):
        want = R.mul(R.from_int(math.comb(k, m)), f.coeff(k - m)) if k >= m else R.zero
        assert prod[k] == want


@given(ring_and_series())
def test_basis_expansion(data):
    R, f = data
    terms = [(f[m], basis(m, f.precision, R)) for m in range(f.precision)]
    assert linear_combination(terms) == f


@given(ring_and_series(count=2))
def test_order_of_product(data):
    _, f, g = data
    of, og = ord(f), ord(g)
    if not of.is_infinite and not og.is_infinite and int(of) + int(og) < f.precision:
        assert ord(mul(f, g)) >= int(of) + int(og)


def test_equal_at():
    f, g = S(1, 2, 3, 4), S(1, 2, 9)
    assert f.equal_at(g, 2)
    assert not f.equal_at(g)
    with pytest.raises(PrecisionError):
        f.equal_at(g, 4)


def test_coeff_negative_index_is_zero():
    f = S(4, 5)
    assert f.coeff(-3) == 0
    assert f.coeff(1) == 5
    with pytest.raises(PrecisionError):
        f.coeff(2)


def test_power():
    f = HSeries(QQ, [2, 1, 3, 0, 1])
    assert f ** 3 == mul(f, mul(f, f))
    assert mul(f ** -2, f ** 2) == HSeries.one(QQ, 5)
