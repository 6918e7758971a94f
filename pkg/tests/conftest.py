from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hurwitz import QQ, ZZ, HSeries, integers_mod

MOD7 = integers_mod(7)
MOD12 = integers_mod(12)
ALL_RINGS = [ZZ, QQ, MOD7, MOD12]


@pytest.fixture(params=ALL_RINGS, ids=repr)
def ring(request):
    return request.param


def elements(ring):
    if ring.kind == "rationals":
        return st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
    if ring.kind == "mod":
        return st.integers(0, ring.modulus - 1)
    return st.integers(-20, 20)


@st.composite
def series(draw, ring, min_size=1, max_size=16, h0=False):
    coeffs = draw(st.lists(elements(ring), min_size=min_size, max_size=max_size))
    if h0 and coeffs:
        coeffs[0] = 0
    return HSeries(ring, coeffs)


@st.composite
def ring_and_series(draw, count=1, size=None, rings=ALL_RINGS, h0=False):
    R = draw(st.sampled_from(rings))
    n = size if size is not None else draw(st.integers(1, 14))
    return (R, *[draw(series(R, n, n, h0=h0)) for _ in range(count)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
