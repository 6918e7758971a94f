"""Exact commutative coefficient rings.

Elements are stored as plain Python numbers (``int`` for the integers and
for ``Z/mZ``, ``fractions.Fraction`` for the rationals).  A :class:`Ring`
knows how to bring a freshly computed number back into canonical form, so
the series code can do its inner loops with native ``+`` and ``*`` and call
:meth:`Ring.normalize` once per output coefficient.

:class:`Elem` is a small typed wrapper for code that wants operator syntax
with ring checking on individual elements.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConfigError, RingMismatchError

INTEGERS = "integers"
RATIONALS = "rationals"
MOD = "mod"


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for p in range(2, math.isqrt(m) + 1):
        if m % p == 0:
            return False
    return True


@lru_cache(maxsize=None)
def binomial_row(n: int) -> tuple[int, ...]:
    """Row ``n`` of Pascal's triangle over the integers."""
    if n == 0:
        return (1,)
    prev = binomial_row(n - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(n - 1)) + (1,)


def binomial(n: int, k: int) -> int:
    """C(n, k) over the integers, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Ring:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == MOD:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.modulus is not None:
                raise ValueError(f"{self.kind} takes no modulus")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    def __repr__(self):
        if self.kind == MOD:
            return f"Ring(mod {self.modulus})"
        return f"Ring({self.kind})"

    # capability flags

    @property
    def q_algebra(self) -> bool:
        """True iff every positive integer is invertible in the ring."""
        return self.kind == RATIONALS

    @property
    def field(self) -> bool:
        return self.kind == RATIONALS or (self.kind == MOD and _is_prime(self.modulus))

    # element construction

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def normalize(self, x):
        """Canonical representative of a value produced by native arithmetic."""
        if self.kind == MOD:
            return x % self.modulus
        if self.kind == RATIONALS:
            return x if isinstance(x, Fraction) else Fraction(x)
        return x

    def from_int(self, n: int):
        """Image of the integer ``n`` under the canonical map Z -> ring."""
        return self.normalize(n)

    def convert(self, x):
        """Coerce user input (int, Fraction, ``"p/q"`` string, Elem) into the ring."""
        if isinstance(x, Elem):
            self._check(x.ring)
            return x.value
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, str):
            x = x.strip()
            if self.kind == RATIONALS:
                return Fraction(x)
            try:
                return self.normalize(int(x))
            except ValueError:
                raise ValueError(f"{x!r} is not an element of {self!r}") from None
        if isinstance(x, int):
            return self.normalize(x)
        if isinstance(x, Fraction):
            if self.kind == RATIONALS:
                return x
            if x.denominator == 1:
                return self.normalize(x.numerator)
            if self.kind == MOD:
                inv = self.try_invert(self.normalize(x.denominator))
                if inv is not None:
                    return self.normalize(x.numerator * inv)
            raise ValueError(f"{x} is not an element of {self!r}")
        raise TypeError(f"cannot convert {type(x).__name__} to {self!r}")

    def __call__(self, x) -> Elem:
        return Elem(self, self.convert(x))

    # arithmetic on raw values

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def neg(self, a):
        return self.normalize(-a)

    def mul(self, a, b):
        return self.normalize(a * b)

    def is_zero(self, a) -> bool:
        return a == 0

    def try_invert(self, a):
        """Return the inverse of ``a`` or ``None`` when ``a`` is not a unit."""
        if self.kind == RATIONALS:
            return None if a == 0 else 1 / Fraction(a)
        if self.kind == INTEGERS:
            return a if a in (1, -1) else None
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            return None

    def is_unit(self, a) -> bool:
        return self.try_invert(a) is not None

    def binomial(self, n: int, k: int):
        return self.from_int(binomial(n, k))

    def factorial(self, n: int):
        return self.from_int(math.factorial(n))

    # (de)serialization

    def format(self, a) -> str:
        if self.kind == RATIONALS:
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def to_config(self):
        if self.kind == MOD:
            return {"mod": self.modulus}
        return self.kind

    @classmethod
    def from_config(cls, spec) -> Ring:
        """Parse ``"integers"``, ``"rationals"`` or ``{"mod": m}``.

        A wrapping ``{"ring": ...}`` dict is accepted too.
        """
        if isinstance(spec, dict) and "ring" in spec:
            spec = spec["ring"]
        if spec == INTEGERS:
            return INTEGER_RING
        if spec == RATIONALS:
            return RATIONAL_RING
        if isinstance(spec, dict) and set(spec) == {"mod"}:
            m = spec["mod"]
            if not isinstance(m, int) or isinstance(m, bool) or m < 2:
                raise ConfigError(f"ring.mod must be an integer >= 2, got {m!r}")
            return cls(MOD, m)
        raise ConfigError(f"unrecognised ring description {spec!r}")

    def random_element(self, rng: random.Random, bound: int = 9):
        """Small random element; used by the randomized law checks."""
        if self.kind == MOD:
            return rng.randrange(self.modulus)
        if self.kind == RATIONALS:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
        return rng.randint(-bound, bound)

    def _check(self, other: Ring):
        if other != self:
            raise RingMismatchError(f"{self!r} vs {other!r}")


INTEGER_RING = Ring(INTEGERS)
RATIONAL_RING = Ring(RATIONALS)
ZZ = INTEGER_RING
QQ = RATIONAL_RING


def integers_mod(m: int) -> Ring:
    return Ring(MOD, m)


@dataclass(frozen=True)
class Elem:
    """A ring element tagged with its ring; mixed-ring arithmetic raises."""

    ring: Ring
    value: object

    def _other(self, other):
        if isinstance(other, Elem):
            self.ring._check(other.ring)
            return other.value
        return self.ring.convert(other)

    def __add__(self, other):
        return Elem(self.ring, self.ring.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Elem(self.ring, self.ring.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Elem(self.ring, self.ring.sub(self._other(other), self.value))

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.value))

    def __mul__(self, other):
        return Elem(self.ring, self.ring.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Elem):
            self.ring._check(other.ring)
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.ring.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def inverse(self) -> Elem | None:
        inv = self.ring.try_invert(self.value)
        return None if inv is None else Elem(self.ring, inv)

    def __repr__(self):
        return f"{self.ring.format(self.value)} in {self.ring!r}"
