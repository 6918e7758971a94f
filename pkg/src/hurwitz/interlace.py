"""Interlacing and unlacing of Hurwitz series.

For a tuple ``(z_0, ..., z_{n-1})`` the interlacing is the series whose
``m``-th coefficient is ``z_{m mod n}(m div n)``.  Unlacing splits a series
back into its ``n`` arithmetic-progression subsequences.

The second half of the module rewrites products ``<k> * intl(z)`` and
``f * intl(z)`` as interlacings of integrated Hadamard products, so that a
product with a variable coefficient never has to leave the tuple picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import PrecisionError, RingMismatchError
from .rings import Ring, binomial
from .series import HSeries, derive, hadamard, integrate


class IndexDecomposition(NamedTuple):
    quotient: int
    remainder: int


def idx_decompose(m: int, n: int) -> IndexDecomposition:
    """Write ``m = quotient * n + remainder`` with ``0 <= remainder < n``."""
    if n < 1:
        raise ValueError(f"arity must be positive, got {n}")
    q, r = divmod(m, n)
    return IndexDecomposition(q, r)


@dataclass(frozen=True, init=False)
class InterlaceTuple:
    """An ordered ``n``-tuple of series over one ring, all of one precision.

    Components are truncated to the shortest precision on construction.
    """

    components: tuple[HSeries, ...]

    def __init__(self, components: Sequence[HSeries]):
        components = tuple(components)
        if not components:
            raise ValueError("an interlace tuple needs at least one component")
        ring = components[0].ring
        for c in components[1:]:
            if c.ring != ring:
                raise RingMismatchError(f"components over {ring!r} and {c.ring!r}")
        prec = min(c.precision for c in components)
        if any(c.precision != prec for c in components):
            components = tuple(c.truncate(prec) for c in components)
        object.__setattr__(self, "components", components)

    @property
    def arity(self) -> int:
        return len(self.components)

    @property
    def precision(self) -> int:
        return self.components[0].precision

    @property
    def ring(self) -> Ring:
        return self.components[0].ring

    def __getitem__(self, i) -> HSeries:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __add__(self, other: InterlaceTuple) -> InterlaceTuple:
        _same_arity(self, other)
        return InterlaceTuple([a + b for a, b in zip(self, other)])

    def scale(self, a) -> InterlaceTuple:
        return InterlaceTuple([c * a for c in self])

    def truncate(self, precision: int) -> InterlaceTuple:
        return InterlaceTuple([c.truncate(precision) for c in self])


def _same_arity(s: InterlaceTuple, t: InterlaceTuple):
    if s.arity != t.arity:
        raise ValueError(f"arity {s.arity} vs {t.arity}")


def intl(t: InterlaceTuple | Sequence[HSeries]) -> HSeries:
    if not isinstance(t, InterlaceTuple):
        t = InterlaceTuple(t)
    n, prec = t.arity, t.precision
    cols = [c.coeffs for c in t]
    coeffs = [cols[r][q] for q in range(prec) for r in range(n)]
    return HSeries._raw(t.ring, coeffs)


def unl(f: HSeries, n: int) -> InterlaceTuple:
    """Split ``f`` into ``f_i(k) = f(k n + i)``.

    Component ``i`` first receives every known ``f(kn + i)``; the tuple then
    truncates to the common precision ``prec(f) // n``.
    """
    if n < 1:
        raise ValueError(f"arity must be positive, got {n}")
    if f.precision < n:
        raise PrecisionError(f"unlacing into {n} parts needs precision >= {n}, got {f.precision}")
    return InterlaceTuple([HSeries._raw(f.ring, f.coeffs[i::n]) for i in range(n)])


def tau_seq(tau: int, n: int, precision: int, ring: Ring) -> HSeries:
    """The progression ``(tau, n + tau, 2n + tau, ...)``, ``1 <= tau <= n``."""
    if n < 1 or not 1 <= tau <= n:
        raise ValueError(f"need 1 <= tau <= n, got tau={tau}, n={n}")
    return HSeries._raw(ring, [ring.from_int(k * n + tau) for k in range(precision)])


def binom_seq(ell: int, k: int, n: int, precision: int, ring: Ring) -> HSeries:
    """``p -> C(ell + p n, k)`` mapped into ``ring``."""
    if n < 1:
        raise ValueError(f"arity must be positive, got {n}")
    return HSeries._raw(ring, [ring.from_int(binomial(ell + p * n, k)) for p in range(precision)])


def hadamard_tuple(s: InterlaceTuple, t: InterlaceTuple) -> InterlaceTuple:
    _same_arity(s, t)
    return InterlaceTuple([hadamard(a, b) for a, b in zip(s, t)])


def integrate_interlaced(t: InterlaceTuple, m: int) -> InterlaceTuple:
    """Tuple whose interlacing is the ``m``-fold integral of ``intl(t)``.

    With ``m = q n + r`` the result is

        (I^{q+1} u_{n-r}, ..., I^{q+1} u_{n-1}, I^q u_0, ..., I^q u_{n-r-1}).

    Its precision is ``prec(t) + q``, so ``intl`` of it is known to
    ``n (prec(t) + q) <= n prec(t) + m`` coefficients.
    """
    if m < 0:
        raise ValueError("integration order must be nonnegative")
    n = t.arity
    q, r = divmod(m, n)
    head = [integrate(t[j], q + 1) for j in range(n - r, n)]
    tail = [integrate(t[j], q) for j in range(n - r)]
    return InterlaceTuple(head + tail)


def derive_interlaced(t: InterlaceTuple, i: int = 1) -> InterlaceTuple:
    """Tuple whose interlacing is ``d^i intl(t)`` for ``0 <= i <= n``.

    The result is ``(u_i, ..., u_{n-1}, d u_0, ..., d u_{i-1})``.
    """
    n = t.arity
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= {n}, got {i}")
    if i == 0:
        return t
    if t.precision < 1:
        raise PrecisionError("cannot differentiate a precision-0 tuple")
    return InterlaceTuple(list(t.components[i:]) + [derive(t[j]) for j in range(i)])


def mul_basis_intl(k: int, m: int, t: InterlaceTuple) -> InterlaceTuple:
    """Tuple ``T`` with ``intl(T) = <k> * I^m intl(t)``.

    Each component is first scaled pointwise by ``C(i + k + m + p n, k)``
    (the factor sequence ``binom_seq(i + k + m, k, n)``), then the whole
    tuple is integrated ``k + m`` times in interlaced form.  For ``m = 0``
    component ``j`` is

        I^{q+1} C^{n-r+k+j}_{k,n} (x) z_{n-r+j}   for j < r,
        I^q     C^{j-r+k}_{k,n}   (x) z_{j-r}     for j >= r,

    where ``k = q n + r``.
    """
    n, prec, ring = t.arity, t.precision, t.ring
    scaled = InterlaceTuple(
        [hadamard(binom_seq(i + k + m, k, n, prec, ring), t[i]) for i in range(n)]
    )
    return integrate_interlaced(scaled, k + m)


def mul_series_intl(f: HSeries, t: InterlaceTuple) -> InterlaceTuple:
    """Tuple ``(h_0, ..., h_{n-1})`` with ``intl(h) = f * intl(t)``.

    ``h_i = sum_k f(k) T_k[i]`` where ``T_k`` is the rotated closed form of
    ``<k> intl(t)``.  Term ``k`` sits in slot ``i`` as an ``I^{q_k}`` or
    ``I^{q_k + 1}`` integral, so ``h_i(p)`` only involves ``k <= p n + i``.
    The output precision is therefore ``min(prec(t), prec(f) // n)``: every
    needed ``f(k)`` is known and the ``k = 0`` term (precision ``prec(t)``)
    is the shortest summand.
    """
    if f.ring != t.ring:
        raise RingMismatchError(f"series over {f.ring!r}, tuple over {t.ring!r}")
    if f.precision < 1:
        raise PrecisionError("multiplier has precision 0")
    n, prec, ring = t.arity, t.precision, t.ring
    out_prec = min(prec, f.precision // n)
    acc = [[0] * out_prec for _ in range(n)]
    for k in range(min(f.precision, n * out_prec)):
        a = f.coeffs[k]
        if a == 0:
            continue
        q, r = divmod(k, n)
        for i in range(n):
            if i < r:
                src, ell, shift = n - r + i, n - r + k + i, q + 1
            else:
                src, ell, shift = i - r, i - r + k, q
            z = t[src].coeffs
            row = acc[i]
            # (I^shift (C^ell_{k,n} (x) z_src))(p) = C(ell + (p - shift) n, k) z_src(p - shift)
            for p in range(shift, out_prec):
                j = p - shift
                zj = z[j]
                if zj:
                    row[p] += a * binomial(ell + j * n, k) * zj
    norm = ring.normalize
    return InterlaceTuple([HSeries._raw(ring, [norm(c) for c in row]) for row in acc])
