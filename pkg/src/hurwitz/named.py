"""Named series that configs and the ``seq`` command can refer to.

A leading ``-`` negates, e.g. ``"-cos"``.
"""

from __future__ import annotations

from .calculus import cos_series, exp, sin_series
from .rings import Ring
from .series import HSeries, basis, invert, neg


def _x(precision, ring):
    if precision < 2:
        return HSeries.zero(ring, precision)
    return basis(1, precision, ring)


NAMED = {
    "zero": lambda p, r: HSeries.zero(r, p),
    "one": lambda p, r: HSeries.one(r, p),
    "x": _x,
    "one-bar": lambda p, r: HSeries.one_bar(r, p),
    "one-bar-inv": lambda p, r: invert(HSeries.one_bar(r, p)),
    "sin": sin_series,
    "cos": cos_series,
    "exp-sin": lambda p, r: exp(sin_series(p, r)),
    "exp-sin-inv": lambda p, r: invert(exp(sin_series(p, r))),
    "one-plus-x": lambda p, r: HSeries.one(r, p) + _x(p, r),
}


def named_series(name: str, precision: int, ring: Ring) -> HSeries:
    negate = name.startswith("-")
    key = name[1:] if negate else name
    try:
        build = NAMED[key]
    except KeyError:
        raise KeyError(f"unknown series {name!r}; known: {', '.join(sorted(NAMED))}") from None
    s = build(precision, ring)
    return neg(s) if negate else s
