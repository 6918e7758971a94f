"""Truncated Hurwitz series.

A Hurwitz series over a ring A is a sequence ``(a(0), a(1), ...)`` with the
binomial convolution product

    (f g)(n) = sum_{i=0..n} C(n, i) f(i) g(n - i).

:class:`HSeries` keeps the first ``precision`` coefficients.  Every
operation reports only coefficients that are fully determined by the known
inputs:

* add / mul / Hadamard take the minimum of the operand precisions,
* ``derive`` loses one coefficient,
* ``integrate(m)`` gains ``m``.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotInvertibleError, PrecisionError, RingMismatchError
from .rings import Ring, binomial_row


@functools.total_ordering
@dataclass(frozen=True)
class Order:
    """Result of :func:`ord`.

    ``value`` is ``None`` when no nonzero coefficient was found among the
    first ``precision`` coefficients; such an order compares greater than
    every natural number ("infinite at precision P").
    """

    value: int | None
    precision: int

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self):
        return (1, 0) if self.value is None else (0, self.value)

    def __eq__(self, other):
        if isinstance(other, Order):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        if other == float("inf"):
            return self.value is None
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        if isinstance(other, int):
            other = Order(other, self.precision)
        if not isinstance(other, Order):
            return NotImplemented
        return self._key() < other._key()

    def __int__(self):
        if self.value is None:
            raise OverflowError(f"order is infinite at precision {self.precision}")
        return self.value

    def __repr__(self):
        if self.value is None:
            return f"Order(inf at precision {self.precision})"
        return f"Order({self.value})"


class SeriesClass(enum.Enum):
    H0 = "H0"              # eps(f) = 0
    H1 = "H1"              # eps(f) = 1
    HSTAR = "HStar"        # eps(f) a unit other than 1
    HDIAMOND = "HDiamond"  # eps(f) nonzero, not a unit


class HSeries:
    """First ``precision`` coefficients of a Hurwitz series over ``ring``.

    Coefficients are raw canonical ring values (see :mod:`hurwitz.rings`).
    ``f[i]`` reads a known coefficient; :meth:`coeff` additionally maps
    negative indices to zero.

    ``==`` is structural (same ring, same precision, same coefficients).
    Use :meth:`equal_at` to compare truncations of different lengths.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable = ()):
        self.ring = ring
        self.coeffs = tuple(ring.convert(c) for c in coeffs)

    @classmethod
    def _raw(cls, ring: Ring, coeffs) -> HSeries:
        # trusted constructor: coefficients already canonical
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(coeffs)
        return obj

    # constructors

    @classmethod
    def zero(cls, ring: Ring, precision: int) -> HSeries:
        return cls._raw(ring, [ring.zero] * precision)

    @classmethod
    def one(cls, ring: Ring, precision: int) -> HSeries:
        return cls.constant(ring.one, ring, precision)

    @classmethod
    def constant(cls, a, ring: Ring, precision: int) -> HSeries:
        coeffs = [ring.zero] * precision
        if precision:
            coeffs[0] = ring.convert(a)
        return cls._raw(ring, coeffs)

    @classmethod
    def one_bar(cls, ring: Ring, precision: int) -> HSeries:
        """The all-ones sequence, identity of the Hadamard product."""
        return cls._raw(ring, [ring.one] * precision)

    # basic protocol

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def coeff(self, j: int):
        """Coefficient ``j``, with the convention ``f(j) = 0`` for ``j < 0``."""
        if j < 0:
            return self.ring.zero
        if j >= self.precision:
            raise PrecisionError(f"coefficient {j} unknown at precision {self.precision}")
        return self.coeffs[j]

    def __eq__(self, other):
        if not isinstance(other, HSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        body = ", ".join(self.ring.format(c) for c in self.coeffs)
        return f"HSeries([{body}], precision={self.precision}, {self.ring!r})"

    def equal_at(self, other: HSeries, precision: int | None = None) -> bool:
        """True iff the first ``precision`` coefficients agree.

        ``precision`` defaults to the smaller of the two precisions and may
        not exceed it.
        """
        _same_ring(self, other)
        common = min(self.precision, other.precision)
        if precision is None:
            precision = common
        if precision > common:
            raise PrecisionError(f"cannot compare at {precision}; only {common} coefficients known")
        return self.coeffs[:precision] == other.coeffs[:precision]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, precision: int) -> HSeries:
        if precision > self.precision:
            raise PrecisionError(f"cannot extend precision {self.precision} to {precision}")
        return HSeries._raw(self.ring, self.coeffs[:precision])

    def to_list(self) -> list:
        return list(self.coeffs)

    # arithmetic

    def __add__(self, other):
        return add(self, _lift(self, other))

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(_lift(self, other)))

    def __rsub__(self, other):
        return add(_lift(self, other), neg(self))

    def __mul__(self, other):
        if isinstance(other, HSeries):
            return mul(self, other)
        return scalar_mul(other, self)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        result = HSeries.one(self.ring, self.precision)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result


def _lift(f: HSeries, other) -> HSeries:
    if isinstance(other, HSeries):
        return other
    return HSeries.constant(other, f.ring, f.precision)


def _same_ring(*series: HSeries) -> Ring:
    ring = series[0].ring
    for s in series[1:]:
        if s.ring != ring:
            raise RingMismatchError(f"series over {ring!r} and {s.ring!r}")
    return ring


def add(f: HSeries, g: HSeries) -> HSeries:
    ring = _same_ring(f, g)
    norm = ring.normalize
    return HSeries._raw(ring, [norm(a + b) for a, b in zip(f.coeffs, g.coeffs)])


def neg(f: HSeries) -> HSeries:
    norm = f.ring.normalize
    return HSeries._raw(f.ring, [norm(-a) for a in f.coeffs])


def sub(f: HSeries, g: HSeries) -> HSeries:
    return add(f, neg(g))


def scalar_mul(a, f: HSeries) -> HSeries:
    ring = f.ring
    a = ring.convert(a)
    norm = ring.normalize
    return HSeries._raw(ring, [norm(a * c) for c in f.coeffs])


def mul(f: HSeries, g: HSeries) -> HSeries:
    """Hurwitz product: c(n) = sum_i C(n, i) f(i) g(n-i)."""
    ring = _same_ring(f, g)
    prec = min(f.precision, g.precision)
    a, b = f.coeffs, g.coeffs
    norm = ring.normalize
    out = []
    for n in range(prec):
        row = binomial_row(n)
        s = 0
        for i in range(n + 1):
            ai = a[i]
            if ai:
                s += row[i] * ai * b[n - i]
        out.append(norm(s))
    return HSeries._raw(ring, out)


def derive(f: HSeries, times: int = 1) -> HSeries:
    """Left shift by ``times``."""
    if f.precision < times:
        raise PrecisionError(f"cannot differentiate {times} time(s) at precision {f.precision}")
    return HSeries._raw(f.ring, f.coeffs[times:])


def integrate(f: HSeries, m: int = 1) -> HSeries:
    """The ``m``-fold integral: prepend ``m`` zeros."""
    if m < 0:
        raise ValueError("integration order must be nonnegative")
    return HSeries._raw(f.ring, (f.ring.zero,) * m + f.coeffs)


def basis(m: int, precision: int, ring: Ring) -> HSeries:
    """The Kronecker delta series <m>."""
    if precision <= m:
        raise PrecisionError(f"<{m}> is not representable at precision {precision}")
    coeffs = [ring.zero] * precision
    coeffs[m] = ring.one
    return HSeries._raw(ring, coeffs)


def eps(f: HSeries):
    """Constant term (augmentation)."""
    if f.precision < 1:
        raise PrecisionError("constant term of a precision-0 series")
    return f.coeffs[0]


def ord(f: HSeries) -> Order:  # noqa: A001 - mirrors the mathematical name
    for i, c in enumerate(f.coeffs):
        if c != 0:
            return Order(i, f.precision)
    return Order(None, f.precision)


def classify(f: HSeries) -> SeriesClass:
    e = eps(f)
    if e == 0:
        return SeriesClass.H0
    if e == 1:
        return SeriesClass.H1
    if f.ring.is_unit(e):
        return SeriesClass.HSTAR
    return SeriesClass.HDIAMOND


def invert(f: HSeries) -> HSeries:
    """Multiplicative inverse via

        g(0) = f(0)^-1,   g(n) = -f(0)^-1 sum_{k=1..n} C(n, k) f(k) g(n-k).
    """
    ring = f.ring
    e = eps(f)
    e_inv = ring.try_invert(e)
    if e_inv is None:
        raise NotInvertibleError(
            f"constant term {ring.format(e)} is not a unit; a Hurwitz series is "
            "invertible iff its constant term is"
        )
    a = f.coeffs
    norm = ring.normalize
    g = [e_inv]
    for n in range(1, f.precision):
        row = binomial_row(n)
        s = 0
        for k in range(1, n + 1):
            if a[k]:
                s += row[k] * a[k] * g[n - k]
        g.append(norm(-e_inv * s))
    return HSeries._raw(ring, g)


def hadamard(f: HSeries, g: HSeries) -> HSeries:
    """Pointwise product (f (x) g)(k) = f(k) g(k)."""
    ring = _same_ring(f, g)
    norm = ring.normalize
    return HSeries._raw(ring, [norm(a * b) for a, b in zip(f.coeffs, g.coeffs)])


def linear_combination(terms: Sequence[tuple[object, HSeries]]) -> HSeries:
    """sum a_i f_i at the minimum precision of the f_i."""
    ring = _same_ring(*(f for _, f in terms))
    prec = min(f.precision for _, f in terms)
    acc = [0] * prec
    for a, f in terms:
        a = ring.convert(a)
        if a == 0:
            continue
        for j in range(prec):
            acc[j] += a * f.coeffs[j]
    return HSeries._raw(ring, [ring.normalize(c) for c in acc])


def from_basis_expansion(pairs: dict[int, object], precision: int, ring: Ring) -> HSeries:
    """Build sum z(m) <m> from a sparse ``{m: z(m)}`` mapping."""
    coeffs = [ring.zero] * precision
    for m, a in pairs.items():
        if m < precision:
            coeffs[m] = ring.convert(a)
    return HSeries._raw(ring, coeffs)
