"""Monic linear homogeneous differential equations over Hurwitz series.

An equation of order ``n`` is

    d^n y + h_{n-1} d^{n-1} y + ... + h_0 y = 0,      h_i in HA.

Reading off coefficient ``m`` gives the recursion used by :func:`solve`,

    y(m + n) = - sum_i sum_{k<=m} C(m, k) h_i(k) y(m + i - k),

which consumes ``h_i(k)`` only for ``k <= m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .calculus import exp
from .errors import NotASolutionError, NotInvertibleError, PrecisionError, RingMismatchError
from .interlace import InterlaceTuple, intl
from .rings import Ring, binomial_row
from .series import (
    HSeries,
    add,
    derive,
    integrate,
    invert,
    linear_combination,
    mul,
    neg,
    scalar_mul,
)


@dataclass(frozen=True, init=False)
class LinearODE:
    """``d^n y + sum_i coeffs[i] d^i y = 0``; the leading coefficient is 1."""

    coeffs: tuple[HSeries, ...]

    def __init__(self, coeffs: Sequence[HSeries]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("order must be at least 1")
        ring = coeffs[0].ring
        for c in coeffs:
            if c.ring != ring:
                raise RingMismatchError(f"coefficients over {ring!r} and {c.ring!r}")
            if c.precision < 1:
                raise PrecisionError("every coefficient needs precision >= 1")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, a: Sequence, ring: Ring, precision: int) -> LinearODE:
        """Equation with constant coefficients ``a_0, ..., a_{n-1}``."""
        return cls([HSeries.constant(x, ring, precision) for x in a])

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def ring(self) -> Ring:
        return self.coeffs[0].ring

    @property
    def precision(self) -> int:
        return min(c.precision for c in self.coeffs)


def solve(ode: LinearODE, initials: Sequence) -> HSeries:
    """Unique solution with ``y(i) = initials[i]`` for ``i < n``.

    Result precision is ``P + n`` with ``P`` the smallest coefficient
    precision.
    """
    n, ring = ode.order, ode.ring
    if len(initials) != n:
        raise ValueError(f"order {n} equation needs {n} initial values, got {len(initials)}")
    y = [ring.convert(c) for c in initials]
    hs = [c.coeffs for c in ode.coeffs]
    norm = ring.normalize
    for m in range(ode.precision):
        row = binomial_row(m)
        s = 0
        for i, h in enumerate(hs):
            for k in range(m + 1):
                hk = h[k]
                if hk:
                    s += row[k] * hk * y[m + i - k]
        y.append(norm(-s))
    return HSeries._raw(ring, y)


def solve_basis(ode: LinearODE) -> list[HSeries]:
    """Solutions for the standard initial vectors ``e_0, ..., e_{n-1}``."""
    n, ring = ode.order, ode.ring
    return [
        solve(ode, [ring.one if j == i else ring.zero for j in range(n)]) for i in range(n)
    ]


def residual(ode: LinearODE, y: HSeries) -> HSeries:
    """``L(y)`` at precision ``min(prec(y) - n, P)``."""
    n = ode.order
    if y.ring != ode.ring:
        raise RingMismatchError(f"solution over {y.ring!r}, equation over {ode.ring!r}")
    if y.precision < n:
        raise PrecisionError(f"need precision >= {n} to apply an order-{n} operator")
    total = derive(y, n)
    for i, h in enumerate(ode.coeffs):
        total = add(total, mul(h, derive(y, i)))
    return total


def verified_through(ode: LinearODE, y: HSeries) -> int:
    """Largest index ``K`` such that ``L(y)(j) = 0`` for all ``j <= K`` (-1 if none)."""
    r = residual(ode, y)
    for j, c in enumerate(r.coeffs):
        if c != 0:
            return j - 1
    return r.precision - 1


# constant coefficients: the first-order matrix form


@dataclass(frozen=True)
class MatrixPair:
    """``L`` lower unitriangular, ``U`` upper triangular, both Toeplitz-banded."""

    L: tuple[tuple, ...]
    U: tuple[tuple, ...]

    @property
    def order(self) -> int:
        return len(self.L)


def build_LU(a: Sequence, ring: Ring) -> MatrixPair:
    """Matrices for ``d^n y + sum a_i d^i y = 0`` in the form ``L Z' = U Z``.

    ``L[i][j] = a_{n-(i-j)}`` below the diagonal, ``U[i][j] = -a_{j-i}`` on
    and above it.
    """
    n = len(a)
    if n < 1:
        raise ValueError("order must be at least 1")
    a = [ring.convert(x) for x in a]
    L = tuple(
        tuple(ring.one if i == j else (a[n - (i - j)] if i > j else ring.zero) for j in range(n))
        for i in range(n)
    )
    U = tuple(
        tuple(ring.neg(a[j - i]) if j >= i else ring.zero for j in range(n)) for i in range(n)
    )
    return MatrixPair(L, U)


def _mat_apply(M, vec: Sequence[HSeries], ring: Ring) -> list[HSeries]:
    return [
        linear_combination([(M[i][j], vec[j]) for j in range(len(vec))]) for i in range(len(M))
    ]


@dataclass(frozen=True)
class MatrixEquivReport:
    ode_holds: bool
    matrix_holds: bool
    precision: int   # per-component coefficients compared on the matrix side

    @property
    def agree(self) -> bool:
        return self.ode_holds == self.matrix_holds


def check_matrix_equiv(a: Sequence, t: InterlaceTuple) -> MatrixEquivReport:
    """Evaluate both sides of the constant-coefficient equivalence.

    ``ode_holds``: ``intl(t)`` solves ``d^n y + sum a_i d^i y = 0``.
    ``matrix_holds``: ``L (d z_0, ..., d z_{n-1})^T = U (z_0, ..., z_{n-1})^T``.
    Both are judged on everything the tuple determines (``prec(t) - 1``
    coefficients per component, ``n (prec(t) - 1)`` for the residual); the
    function does not assume the two answers coincide.
    """
    n, ring = t.arity, t.ring
    if len(a) != n:
        raise ValueError(f"{len(a)} constants for an arity-{n} tuple")
    if t.precision < 1:
        raise PrecisionError("tuple needs precision >= 1")
    u = intl(t)
    ode = LinearODE.constant(a, ring, u.precision)
    ode_holds = residual(ode, u).is_zero()
    mp = build_LU(a, ring)
    dz = [derive(c) for c in t]
    z = [c.truncate(t.precision - 1) for c in t]
    lhs = _mat_apply(mp.L, dz, ring)
    rhs = _mat_apply(mp.U, z, ring)
    matrix_holds = all(l.equal_at(r) for l, r in zip(lhs, rhs))
    return MatrixEquivReport(ode_holds, matrix_holds, t.precision - 1)


# second-order equations


def _require_order2(ode: LinearODE):
    if ode.order != 2:
        raise ValueError(f"expected a second-order equation, got order {ode.order}")


def _unit_head_inverse(y1: HSeries) -> HSeries:
    try:
        return invert(y1)
    except NotInvertibleError:
        raise NotInvertibleError(
            f"y1(0) = {y1.ring.format(y1[0])} is not a unit; reduction of order needs an "
            "invertible solution"
        ) from None


def wronskian_kernel(ode: LinearODE, y1: HSeries) -> HSeries:
    """``exp(-I h_1) * y1^-2``, the integrand of the second solution."""
    _require_order2(ode)
    y1_inv = _unit_head_inverse(y1)
    return mul(exp(neg(integrate(ode.coeffs[1]))), mul(y1_inv, y1_inv))


def _check_solution(ode: LinearODE, y1: HSeries):
    r = residual(ode, y1)
    if not r.is_zero():
        bad = next(j for j, c in enumerate(r.coeffs) if c != 0)
        raise NotASolutionError(
            f"y1 does not solve the equation: residual coefficient {bad} is "
            f"{r.ring.format(r[bad])}",
            residual=r,
        )


def second_solution(ode: LinearODE, y1: HSeries) -> HSeries:
    """``y2 = y1 * I(exp(-I h_1) y1^-2)`` for an invertible solution ``y1``.

    ``y2(0) = 0`` and ``y2(1) = y1(0)^-1``, which makes ``y1, y2``
    independent.  Raises :class:`NotASolutionError` if ``y1`` visibly fails
    the equation at the available precision.
    """
    _require_order2(ode)
    _check_solution(ode, y1)
    return mul(y1, integrate(wronskian_kernel(ode, y1)))


def general_solution(ode: LinearODE, y1: HSeries, c1, c2) -> HSeries:
    """``y1 (c1 + c2 I(exp(-I h_1) y1^-2))``."""
    _require_order2(ode)
    _check_solution(ode, y1)
    factor = scalar_mul(c2, integrate(wronskian_kernel(ode, y1)))
    return mul(y1, factor + c1)


def reduction_delta(ode: LinearODE, y1: HSeries) -> HSeries:
    """``2 (d y1) y1^-1 + h_1``."""
    _require_order2(ode)
    y1_inv = _unit_head_inverse(y1)
    return add(scalar_mul(2, mul(derive(y1), y1_inv)), ode.coeffs[1])


def reduction_factor(ode: LinearODE, y1: HSeries, h0_init, h1_init) -> HSeries:
    """Factor ``h`` with ``h y1`` a solution, from ``h(0)``, ``h(1)`` and

        h(m + 2) = - sum_{i<=m} C(m, i) h(i + 1) delta(m - i).
    """
    delta = reduction_delta(ode, y1)
    ring = ode.ring
    d = delta.coeffs
    h = [ring.convert(h0_init), ring.convert(h1_init)]
    norm = ring.normalize
    for m in range(delta.precision):
        row = binomial_row(m)
        s = 0
        for i in range(m + 1):
            if h[i + 1]:
                s += row[i] * h[i + 1] * d[m - i]
        h.append(norm(-s))
    return HSeries._raw(ring, h)


def reduction_factor_closed_form(ode: LinearODE, y1: HSeries, h0_init, h1_init) -> HSeries:
    """``h(1) y1(0)^2 I(exp(-I h_1) y1^-2) + h(0)``."""
    ring = ode.ring
    y0 = y1[0]
    scale = ring.mul(ring.convert(h1_init), ring.mul(y0, y0))
    return scalar_mul(scale, integrate(wronskian_kernel(ode, y1))) + ring.convert(h0_init)
