"""JSON-friendly encodings and the b-file text format.

* ring:        ``"integers"``, ``"rationals"`` or ``{"mod": m}``
* series:      ``{"coeffs": ["1", "-1/2", ...], "precision": P}``
* egf series:  same, plus ``"kind": "egf"``
* tuple:       ``{"arity": n, "components": [series, ...]}``
* equation:    ``{"order": n, "coeffs": [series | name, ...], "ring": ring}``

Coefficients are written as decimal strings (``"p/q"`` over the rationals,
the canonical representative mod m).  On input plain JSON integers are
accepted as well.
"""

from __future__ import annotations

from .calculus import EgfSeries
from .errors import ConfigError
from .interlace import InterlaceTuple
from .named import named_series
from .ode import LinearODE
from .rings import Ring
from .series import HSeries


def series_to_dict(f: HSeries) -> dict:
    return {"coeffs": [f.ring.format(c) for c in f.coeffs], "precision": f.precision}


def _coeff_list(d, ring: Ring, where: str) -> list:
    if not isinstance(d, dict) or "coeffs" not in d:
        raise ConfigError(f"{where}: expected an object with a 'coeffs' list")
    coeffs = d["coeffs"]
    if not isinstance(coeffs, list):
        raise ConfigError(f"{where}.coeffs: expected a list")
    prec = d.get("precision", len(coeffs))
    if prec != len(coeffs):
        raise ConfigError(f"{where}.precision is {prec} but {len(coeffs)} coefficients given")
    out = []
    for i, c in enumerate(coeffs):
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise ConfigError(f"{where}.coeffs[{i}]: expected an integer or string, got {c!r}")
        try:
            out.append(ring.convert(c))
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"{where}.coeffs[{i}]: {exc}") from None
    return out


def series_from_dict(d, ring: Ring, where: str = "series") -> HSeries:
    return HSeries(ring, _coeff_list(d, ring, where))


def series_from_spec(spec, ring: Ring, precision: int, where: str = "series") -> HSeries:
    """A named constant expanded at ``precision``, or an explicit series."""
    if isinstance(spec, str):
        try:
            return named_series(spec, precision, ring)
        except KeyError as exc:
            raise ConfigError(f"{where}: {exc.args[0]}") from None
    return series_from_dict(spec, ring, where)


def egf_to_dict(e: EgfSeries) -> dict:
    return {"kind": "egf", "coeffs": [e.ring.format(c) for c in e.coeffs], "precision": e.precision}


def egf_from_dict(d, ring: Ring, where: str = "series") -> EgfSeries:
    if isinstance(d, dict) and d.get("kind", "egf") != "egf":
        raise ConfigError(f"{where}.kind must be 'egf'")
    return EgfSeries(ring, _coeff_list(d, ring, where))


def tuple_to_dict(t: InterlaceTuple) -> dict:
    return {"arity": t.arity, "components": [series_to_dict(c) for c in t]}


def tuple_from_dict(d, ring: Ring, where: str = "tuple") -> InterlaceTuple:
    if not isinstance(d, dict) or "components" not in d:
        raise ConfigError(f"{where}: expected an object with 'components'")
    comps = [series_from_dict(c, ring, f"{where}.components[{i}]") for i, c in enumerate(d["components"])]
    if not comps:
        raise ConfigError(f"{where}.components: empty")
    if d.get("arity", len(comps)) != len(comps):
        raise ConfigError(f"{where}.arity is {d['arity']} but {len(comps)} components given")
    return InterlaceTuple(comps)


def ode_to_dict(ode: LinearODE) -> dict:
    return {
        "order": ode.order,
        "coeffs": [series_to_dict(c) for c in ode.coeffs],
        "ring": ode.ring.to_config(),
    }


def ode_from_dict(d, ring: Ring | None, precision: int, where: str = "ode") -> LinearODE:
    if not isinstance(d, dict):
        raise ConfigError(f"{where}: expected an object")
    if "ring" in d:
        own = Ring.from_config(d["ring"])
        if ring is not None and own != ring:
            raise ConfigError(f"{where}.ring {own!r} disagrees with the job ring {ring!r}")
        ring = own
    if ring is None:
        raise ConfigError(f"{where}: no ring given")
    coeffs = d.get("coeffs")
    if not isinstance(coeffs, list) or not coeffs:
        raise ConfigError(f"{where}.coeffs: expected a nonempty list")
    order = d.get("order", len(coeffs))
    if order != len(coeffs):
        raise ConfigError(f"{where}.order is {order} but {len(coeffs)} coefficients given")
    series = []
    for i, c in enumerate(coeffs):
        s = series_from_spec(c, ring, precision, f"{where}.coeffs[{i}]")
        if s.precision < 1:
            raise ConfigError(f"{where}.coeffs[{i}]: precision must be >= 1")
        series.append(s)
    return LinearODE(series)


def bfile_lines(coeffs, ring: Ring, offset: int = 0) -> list[str]:
    return [f"{i + offset} {ring.format(c)}" for i, c in enumerate(coeffs)]


def parse_bfile(text: str) -> dict[int, str]:
    """``{index: value}`` from b-file text; ``#`` lines and blanks are skipped."""
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, val = line.split()
        out[int(idx)] = val
    return out
