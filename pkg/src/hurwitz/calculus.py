"""Divided powers, the exponential on H0, sin/cos, and the EGF transport.

Divided powers are defined without division,

    h^[0] = 1,   h^[n] = I(h^[n-1] * d h),

so ``exp(h) = sum_n h^[n]`` makes sense over any ring, including rings of
positive characteristic.  Only the conversion to exponential generating
functions needs every ``n!`` to be invertible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .errors import CapabilityError, DomainError, PrecisionError, RingMismatchError
from .interlace import intl
from .rings import Ring
from .series import HSeries, derive, eps, integrate, invert, mul, neg


def divided_power(h: HSeries, n: int) -> HSeries:
    if h.precision < 1:
        raise PrecisionError("divided power of a precision-0 series")
    return divided_powers(h, n)[n]


def divided_powers(h: HSeries, count: int) -> list[HSeries]:
    """``[h^[0], ..., h^[count]]``, each at precision ``prec(h)``."""
    if h.precision < 1:
        raise PrecisionError("divided power of a precision-0 series")
    dh = derive(h)
    powers = [HSeries.one(h.ring, h.precision)]
    for _ in range(count):
        powers.append(integrate(mul(powers[-1], dh)))
    return powers


def _require_h0(h: HSeries, what: str):
    if h.precision < 1:
        raise PrecisionError(f"{what} of a precision-0 series")
    if eps(h) != 0:
        raise DomainError(
            f"{what} needs a series with zero constant term, got {h.ring.format(eps(h))}"
        )


def exp(h: HSeries) -> HSeries:
    """``exp(h)(n) = sum_{k<=n} h^[k](n)`` for ``h`` with ``h(0) = 0``.

    Terms ``h^[k](n)`` with ``k > n`` vanish, so ``prec(h)`` divided powers
    suffice.
    """
    _require_h0(h, "exp")
    prec = h.precision
    ring = h.ring
    acc = [0] * prec
    for k, p in enumerate(divided_powers(h, prec - 1)):
        for n in range(k, prec):
            acc[n] += p.coeffs[n]
    return HSeries._raw(ring, [ring.normalize(c) for c in acc])


def _alternating(precision: int, ring: Ring) -> HSeries:
    return invert(HSeries.one_bar(ring, precision))


def sin_series(precision: int, ring: Ring) -> HSeries:
    """``intl(0, 1bar^-1)`` truncated to ``precision``."""
    half = (precision + 1) // 2
    alt = _alternating(half, ring)
    return intl([HSeries.zero(ring, half), alt]).truncate(precision)


def cos_series(precision: int, ring: Ring) -> HSeries:
    """``intl(1bar^-1, 0)`` truncated to ``precision``."""
    half = (precision + 1) // 2
    alt = _alternating(half, ring)
    return intl([alt, HSeries.zero(ring, half)]).truncate(precision)


class LawCheck(NamedTuple):
    lhs: HSeries
    rhs: HSeries

    @property
    def holds(self) -> bool:
        return self.lhs.equal_at(self.rhs)


def exp_inverse_law(h: HSeries) -> LawCheck:
    """``(exp(-h), exp(h)^-1)``; the two agree for every ``h`` in H0."""
    _require_h0(h, "exp")
    return LawCheck(exp(neg(h)), invert(exp(h)))


def exp_derivative_law(h: HSeries) -> LawCheck:
    """``(d exp(h), exp(h) d h)`` at precision ``prec(h) - 1``."""
    _require_h0(h, "exp")
    e = exp(h)
    return LawCheck(derive(e), mul(e, derive(h)))


class EgfSeries:
    """Ordinary power series ``sum c_n t^n`` over a Q-algebra.

    This is the image of a Hurwitz series under ``h -> sum h(n)/n! t^n``;
    the product here is the Cauchy product and :meth:`derive` is ``d/dt``.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        _require_q(ring)
        self.ring = ring
        self.coeffs = tuple(ring.convert(c) for c in coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        body = ", ".join(self.ring.format(c) for c in self.coeffs)
        return f"EgfSeries([{body}], precision={self.precision})"

    def __add__(self, other: EgfSeries) -> EgfSeries:
        _same(self, other)
        return EgfSeries(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: EgfSeries) -> EgfSeries:
        _same(self, other)
        a, b = self.coeffs, other.coeffs
        prec = min(len(a), len(b))
        return EgfSeries(
            self.ring,
            [sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)) for n in range(prec)],
        )

    def derive(self) -> EgfSeries:
        if self.precision < 1:
            raise PrecisionError("derivative of a precision-0 series")
        return EgfSeries(self.ring, [n * c for n, c in enumerate(self.coeffs) if n > 0])


def _same(a: EgfSeries, b: EgfSeries):
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring!r} vs {b.ring!r}")


def _require_q(ring: Ring):
    if not ring.q_algebra:
        raise CapabilityError(
            f"{ring!r} does not contain Q; the EGF correspondence needs 1/n! in the ring"
        )


def to_egf(h: HSeries) -> EgfSeries:
    _require_q(h.ring)
    return EgfSeries(h.ring, [Fraction(c) / math.factorial(n) for n, c in enumerate(h.coeffs)])


def from_egf(e: EgfSeries) -> HSeries:
    _require_q(e.ring)
    return HSeries(e.ring, [c * math.factorial(n) for n, c in enumerate(e.coeffs)])
