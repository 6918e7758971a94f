"""Randomized identity suites behind ``hurwitz check``.

Each suite draws ``cases`` random instances from a seeded
:class:`random.Random` and compares two independently computed sides.
Direct Hurwitz products serve as the oracle for the interlacing formulas.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from . import calculus, interlace, ode, series
from .interlace import InterlaceTuple, intl, unl
from .rings import QQ, ZZ, Ring, integers_mod
from .series import HSeries, basis, derive, integrate, mul

MOD7 = integers_mod(7)
CHECK_RINGS = (ZZ, QQ, MOD7)


def random_series(rng: random.Random, ring: Ring, precision: int, bound: int = 9) -> HSeries:
    return HSeries._raw(ring, [ring.random_element(rng, bound) for _ in range(precision)])


def random_h0(rng: random.Random, ring: Ring, precision: int, bound: int = 5) -> HSeries:
    """Random series with zero constant term."""
    s = random_series(rng, ring, precision, bound)
    return HSeries._raw(ring, (ring.zero,) + s.coeffs[1:])


def random_unit_series(rng: random.Random, ring: Ring, precision: int, bound: int = 9) -> HSeries:
    s = random_series(rng, ring, precision, bound)
    while True:
        head = ring.random_element(rng, bound)
        if ring.is_unit(head):
            return HSeries._raw(ring, (head,) + s.coeffs[1:])


def random_tuple(rng: random.Random, ring: Ring, arity: int, precision: int) -> InterlaceTuple:
    return InterlaceTuple([random_series(rng, ring, precision) for _ in range(arity)])


@dataclass
class CheckResult:
    suite: str
    cases: int
    passed: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status} {self.suite}: {self.passed}/{self.cases} cases"
        if self.counterexample:
            msg += f"; first counterexample: {self.counterexample}"
        return msg


def _ring(rng: random.Random, rings=CHECK_RINGS) -> Ring:
    return rings[rng.randrange(len(rings))]


def _run(name: str, rng: random.Random, cases: int, case: Callable) -> CheckResult:
    for i in range(cases):
        problem = case(rng)
        if problem is not None:
            return CheckResult(name, cases, i, problem)
    return CheckResult(name, cases, cases)


def ring_axioms(rng, cases):
    rings = (ZZ, QQ, MOD7, integers_mod(12))

    def case(rng):
        R = _ring(rng, rings)
        a, b, c = (R.random_element(rng) for _ in range(3))
        laws = {
            "add-assoc": R.add(R.add(a, b), c) == R.add(a, R.add(b, c)),
            "add-comm": R.add(a, b) == R.add(b, a),
            "mul-assoc": R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)),
            "mul-comm": R.mul(a, b) == R.mul(b, a),
            "distrib": R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)),
            "identities": R.add(a, R.zero) == a and R.mul(a, R.one) == a,
            "negation": R.add(a, R.neg(a)) == R.zero,
        }
        inv = R.try_invert(a)
        laws["inverse"] = inv is None or R.mul(a, inv) == R.one
        f, g, h = (random_series(rng, R, 16) for _ in range(3))
        laws["series-assoc"] = mul(mul(f, g), h) == mul(f, mul(g, h))
        laws["series-comm"] = mul(f, g) == mul(g, f)
        laws["series-distrib"] = mul(f, g + h) == mul(f, g) + mul(f, h)
        laws["series-one"] = mul(f, HSeries.one(R, 16)) == f
        bad = [k for k, ok in laws.items() if not ok]
        return f"{R!r}: {bad} fail for a={a}, b={b}, c={c}" if bad else None

    return _run("ring-axioms", rng, cases, case)


def rota_baxter(rng, cases):
    def case(rng):
        R = _ring(rng)
        f, g = random_series(rng, R, 16), random_series(rng, R, 16)
        If, Ig = integrate(f), integrate(g)
        lhs = mul(If, Ig)
        rhs = integrate(mul(f, Ig)) + integrate(mul(If, g))
        if not lhs.equal_at(rhs):
            return f"{R!r}: I(f) I(g) != I(f I(g)) + I(I(f) g) for f={f.to_list()}, g={g.to_list()}"
        if derive(If) != f:
            return f"{R!r}: d I f != f for f={f.to_list()}"
        if not derive(mul(f, g)).equal_at(mul(derive(f), g) + mul(f, derive(g))):
            return f"{R!r}: Leibniz rule fails for f={f.to_list()}, g={g.to_list()}"
        return None

    return _run("rota-baxter", rng, cases, case)


def interlace_bijection(rng, cases):
    def case(rng):
        R = _ring(rng)
        n = rng.randint(1, 5)
        t = random_tuple(rng, R, n, rng.randint(1, 8))
        if unl(intl(t), n) != t:
            return f"{R!r}: unl(intl(t)) != t for n={n}"
        f = random_series(rng, R, rng.randint(n, 30))
        back = intl(unl(f, n))
        if back != f.truncate(n * (f.precision // n)):
            return f"{R!r}: intl(unl(f)) != f for n={n}, f={f.to_list()}"
        return None

    return _run("interlace-bijection", rng, cases, case)


def thm_main1(rng, cases):
    def case(rng):
        R = _ring(rng, (QQ, MOD7))
        n, k = rng.randint(1, 4), rng.randint(0, 8)
        prec = rng.randint(1, 24 // n)
        t = random_tuple(rng, R, n, prec)
        z = intl(t)
        got = intl(interlace.mul_basis_intl(k, 0, t))
        want = mul(basis(k, z.precision + k, R), z)
        if not got.equal_at(want):
            return f"{R!r}: <{k}> intl(t) mismatch, n={n}, prec={prec}"
        return None

    return _run("thm-main1", rng, cases, case)


def thm_fintl(rng, cases):
    def case(rng):
        R = _ring(rng, (QQ, MOD7))
        n = rng.randint(1, 4)
        prec = rng.randint(1, 24 // n)
        t = random_tuple(rng, R, n, prec)
        f = random_series(rng, R, rng.randint(n, 24))
        got = intl(interlace.mul_series_intl(f, t))
        want = mul(f, intl(t))
        if not got.equal_at(want):
            return f"{R!r}: f intl(t) mismatch, n={n}, f={f.to_list()}"
        return None

    return _run("thm-fintl", rng, cases, case)


def _constant_instance(rng, R: Ring, n: int, prec: int):
    """Constants plus a tuple; half of the tuples come from true solutions."""
    a = [R.random_element(rng, 4) for _ in range(n)]
    if rng.random() < 0.5:
        eq = ode.LinearODE.constant(a, R, n * prec)
        y = ode.solve(eq, [R.random_element(rng, 4) for _ in range(n)])
        t = unl(y, n).truncate(prec)
    else:
        t = random_tuple(rng, R, n, prec)
    return a, t


def gkthm_equiv(rng, cases):
    def case(rng):
        R = _ring(rng)
        n = rng.randint(1, 3)
        a, t = _constant_instance(rng, R, n, 20)
        rep = ode.check_matrix_equiv(a, t)
        if not rep.agree:
            return f"{R!r}: a={a}: ode={rep.ode_holds}, matrix={rep.matrix_holds}"
        return None

    return _run("gkthm-equiv", rng, cases, case)


def divided_powers(rng, cases):
    def case(rng):
        R = _ring(rng)
        prec = rng.randint(1, 14)
        h = random_h0(rng, R, prec)
        powers = calculus.divided_powers(h, 6)
        for n, p in enumerate(powers):
            if any(p[i] != 0 for i in range(min(n, prec))):
                return f"{R!r}: h^[{n}] has a nonzero coefficient below {n}"
            if R.q_algebra and p * math.factorial(n) != h ** n:
                return f"{R!r}: {n}! h^[{n}] != h^{n} for h={h.to_list()}"
        return None

    return _run("divided-powers", rng, cases, case)


def exp_laws(rng, cases):
    def case(rng):
        R = _ring(rng)
        h = random_h0(rng, R, rng.randint(1, 16))
        if not calculus.exp_inverse_law(h).holds:
            return f"{R!r}: exp(-h) != exp(h)^-1 for h={h.to_list()}"
        if not calculus.exp_derivative_law(h).holds:
            return f"{R!r}: d exp(h) != exp(h) d h for h={h.to_list()}"
        if h.precision and calculus.exp(h)[0] != 1:
            return f"{R!r}: exp(h)(0) != 1"
        return None

    return _run("exp-laws", rng, cases, case)


def random_order2_with_solution(rng, R: Ring, prec: int):
    """Random ``d^2 + h1 d + h0`` together with an invertible solution ``y1``.

    ``h0 = -(d^2 y1 + h1 d y1) / y1`` makes ``y1`` a solution by construction.
    """
    y1 = random_unit_series(rng, R, prec + 2, 4)
    h1 = random_series(rng, R, prec, 4)
    h0 = -mul(derive(y1, 2) + mul(h1, derive(y1)), series.invert(y1))
    return ode.LinearODE([h0, h1]), y1


def reduction_order(rng, cases):
    def case(rng):
        R = _ring(rng, (QQ, MOD7))
        eq, y1 = random_order2_with_solution(rng, R, rng.randint(2, 12))
        a, b = R.random_element(rng), R.random_element(rng)
        h = ode.reduction_factor(eq, y1, a, b)
        if not ode.residual(eq, mul(h, y1)).is_zero():
            return f"{R!r}: h y1 is not a solution"
        closed = ode.reduction_factor_closed_form(eq, y1, a, b)
        if not h.equal_at(closed):
            return f"{R!r}: recursion and closed form differ"
        y2 = ode.second_solution(eq, y1)
        if y2[0] != 0 or y2[1] != R.try_invert(y1[0]):
            return f"{R!r}: independence witness fails"
        return None

    return _run("reduction-order", rng, cases, case)


SUITES = {
    "ring-axioms": ring_axioms,
    "rota-baxter": rota_baxter,
    "interlace-bijection": interlace_bijection,
    "thm-main1": thm_main1,
    "thm-fintl": thm_fintl,
    "gkthm-equiv": gkthm_equiv,
    "divided-powers": divided_powers,
    "exp-laws": exp_laws,
    "reduction-order": reduction_order,
}


def run_suite(name: str, seed: int = 0, cases: int = 200) -> CheckResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    # derive a per-suite stream so "all" and single runs report identical results
    rng = random.Random(f"{name}:{seed}")
    return suite(rng, cases)
