import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz import (
    QQ,
    ZZ,
    CapabilityError,
    DomainError,
    EgfSeries,
    HSeries,
    SeriesClass,
    basis,
    classify,
    cos_series,
    derive,
    divided_power,
    eps,
    exp,
    exp_derivative_law,
    exp_inverse_law,
    from_egf,
    integrate,
    invert,
    mul,
    ord,
    sin_series,
    to_egf,
)
from hurwitz.calculus import divided_powers
from hurwitz.checks import random_h0, random_series, random_unit_series

from conftest import ALL_RINGS, MOD7, ring_and_series
from oracles import egf_to_sequence, ps_exp, ps_mul, sin_ps


def S(*coeffs, ring=ZZ):
    return HSeries(ring, coeffs)


class TestDividedPower:
    def test_powers_of_x(self, ring):
        x = basis(1, 10, ring)
        for n in range(10):
            assert divided_power(x, n) == basis(n, 10, ring)

    def test_zeroth(self, ring):
        h = HSeries(ring, [3, 1, 4])
        assert divided_power(h, 0) == HSeries.one(ring, 3)

    def test_square_over_q(self):
        h = HSeries(QQ, [0, 1, 1, 0])
        # h^2 by direct convolution is (0, 0, 2, 6)
        assert mul(h, h) == HSeries(QQ, [0, 0, 2, 6])
        assert divided_power(h, 2) == HSeries(QQ, [0, 0, 1, 3])

    def test_power_rule(self, ring):
        rng = random.Random(8)
        h = random_series(rng, ring, 10)
        for n in range(1, 6):
            assert derive(divided_power(h, n)) == mul(divided_power(h, n - 1), derive(h))

    @settings(max_examples=50)
    @given(st.data())
    def test_factorial_law_over_q(self, data):
        _, h = data.draw(ring_and_series(rings=[QQ], h0=True))
        for n, p in enumerate(divided_powers(h, 6)):
            assert p * math.factorial(n) == h ** n

    @settings(max_examples=50)
    @given(ring_and_series(count=2, rings=ALL_RINGS, h0=True))
    def test_sum_law(self, data):
        _, f, g = data
        F, G = divided_powers(f, 5), divided_powers(g, 5)
        FG = divided_powers(f + g, 5)
        for n in range(6):
            total = HSeries.zero(f.ring, f.precision)
            for i in range(n + 1):
                total = total + mul(F[i], G[n - i])
            assert FG[n] == total

    @settings(max_examples=50)
    @given(ring_and_series(count=1, rings=ALL_RINGS, h0=True))
    def test_product_law(self, data):
        _, f = data
        P = divided_powers(f, 8)
        for m in range(9):
            for n in range(9 - m):
                assert mul(P[m], P[n]) == P[m + n] * math.comb(m + n, m)

    @settings(max_examples=50)
    @given(ring_and_series(count=2, rings=ALL_RINGS, h0=True))
    def test_scaling_law(self, data):
        _, f, h = data
        f = f + 1  # arbitrary f; h stays in H0
        for n in range(5):
            assert divided_power(mul(f, h), n) == mul(f ** n, divided_power(h, n))

    @given(ring_and_series(rings=ALL_RINGS, h0=True))
    def test_vanishing_below_diagonal(self, data):
        _, h = data
        for n, p in enumerate(divided_powers(h, 8)):
            assert all(p[i] == 0 for i in range(min(n, p.precision)))
            o = ord(h)
            if not o.is_infinite and n * int(o) < p.precision:
                assert ord(p) >= n * int(o)

    @given(ring_and_series(rings=ALL_RINGS, h0=True))
    def test_order_of_derivative(self, data):
        _, h = data
        o = ord(h)
        if not o.is_infinite:
            assert ord(derive(h)) == int(o) - 1


class TestExp:
    def test_exp_x(self, ring):
        assert exp(basis(1, 8, ring)) == HSeries.one_bar(ring, 8)

    def test_exp_zero(self, ring):
        assert exp(HSeries.zero(ring, 5)) == HSeries.one(ring, 5)

    def test_exp_sin(self):
        assert exp(sin_series(10, ZZ)) == S(1, 1, 1, 0, -3, -8, -3, 56, 217, 64)

    def test_exp_sin_against_power_series_oracle(self):
        want = egf_to_sequence(ps_exp(sin_ps(25)))
        assert exp(sin_series(25, ZZ)).to_list() == want

    def test_exp_sin_char_p(self):
        want = [int(c) % 7 for c in egf_to_sequence(ps_exp(sin_ps(20)))]
        assert exp(sin_series(20, MOD7)).to_list() == want

    def test_domain(self):
        with pytest.raises(DomainError):
            exp(cos_series(6, ZZ))

    def test_class(self):
        assert classify(exp(sin_series(6, ZZ))) is SeriesClass.H1

    def test_inverse_law_examples(self):
        law = exp_inverse_law(sin_series(12, ZZ))
        assert law.holds
        law = exp_inverse_law(HSeries.zero(ZZ, 4))
        assert law.lhs == law.rhs == HSeries.one(ZZ, 4)
        law = exp_inverse_law(basis(1, 8, ZZ))
        assert law.lhs == S(1, -1, 1, -1, 1, -1, 1, -1) == invert(HSeries.one_bar(ZZ, 8))

    @settings(max_examples=100)
    @given(ring_and_series(rings=ALL_RINGS, h0=True))
    def test_laws_randomized(self, data):
        _, h = data
        assert exp_inverse_law(h).holds
        assert exp_derivative_law(h).holds
        assert eps(exp(h)) == 1


class TestSinCos:
    def test_values(self):
        assert sin_series(8, ZZ) == S(0, 1, 0, -1, 0, 1, 0, -1)
        assert cos_series(8, ZZ) == S(1, 0, -1, 0, 1, 0, -1, 0)
        assert sin_series(5, ZZ) == S(0, 1, 0, -1, 0)

    def test_sin_in_h0(self):
        s = sin_series(6, ZZ)
        assert eps(s) == 0 and classify(s) is SeriesClass.H0

    def test_derivatives(self, ring):
        s, c = sin_series(12, ring), cos_series(12, ring)
        assert derive(s) == c.truncate(11)
        assert derive(c) == (-s).truncate(11)
        assert integrate(c).equal_at(s)


def test_power_derivative_rule():
    rng = random.Random(21)
    for _ in range(30):
        f = random_unit_series(rng, QQ, 10)
        for k in range(-3, 6):
            lhs = derive(f ** k)
            rhs = mul(f ** (k - 1), derive(f)) * k
            assert lhs == rhs


class TestEgf:
    def test_one_bar(self):
        e = to_egf(HSeries.one_bar(QQ, 5))
        assert e.coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))

    def test_x(self):
        assert to_egf(basis(1, 4, QQ)).coeffs == (0, 1, 0, 0)

    def test_round_trip(self):
        h = HSeries(QQ, [3, Fraction(-1, 2), 7, 0, 5])
        assert from_egf(to_egf(h)) == h
        e = EgfSeries(QQ, [1, Fraction(2, 3), 0, 4])
        assert to_egf(from_egf(e)) == e

    def test_capability(self):
        for R in (ZZ, MOD7):
            with pytest.raises(CapabilityError, match="contain Q"):
                to_egf(HSeries.one(R, 3))
            with pytest.raises(CapabilityError):
                EgfSeries(R, [1])

    @given(ring_and_series(count=2, rings=[QQ]))
    def test_product_and_derivative_transport(self, data):
        _, f, g = data
        assert to_egf(mul(f, g)) == to_egf(f) * to_egf(g)
        assert list((to_egf(f) * to_egf(g)).coeffs) == ps_mul(to_egf(f).coeffs, to_egf(g).coeffs)
        assert to_egf(derive(f)) == to_egf(f).derive()
