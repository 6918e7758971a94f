"""Command-line front end.

    hurwitz seq <name> <precision> [--ring R]
    hurwitz solve <config.json>
    hurwitz egf <config.json>
    hurwitz check <suite|all> [--seed N] [--cases N]
    hurwitz run <config.json>          # dispatch on the config's "task"

Sequences are printed as OEIS b-files ("index value" per line) on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import checks
from .calculus import from_egf, to_egf
from .errors import ConfigError, HurwitzError
from .named import NAMED, named_series
from .ode import residual, solve
from .rings import Ring
from .serialize import (
    bfile_lines,
    egf_from_dict,
    ode_from_dict,
    series_from_spec,
)

TASKS = ("seq", "solve", "check", "egf")


def parse_ring(text: str) -> Ring:
    """``integers``, ``rationals``, ``mod:M`` or a JSON ring description."""
    text = text.strip()
    if text.startswith("mod:"):
        try:
            return Ring.from_config({"mod": int(text[4:])})
        except ValueError:
            raise ConfigError(f"bad modulus in {text!r}") from None
    if text.startswith("{"):
        return Ring.from_config(json.loads(text))
    return Ring.from_config(text)


def load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None
    if not isinstance(cfg, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return cfg


def _precision(cfg: dict, key: str = "precision") -> int:
    p = cfg.get(key)
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise ConfigError(f"{key}: expected an integer >= 1, got {p!r}")
    return p


def _ring(cfg: dict) -> Ring:
    if "ring" not in cfg:
        return Ring.from_config("integers")
    try:
        return Ring.from_config(cfg["ring"])
    except ConfigError as exc:
        raise ConfigError(f"ring: {exc}") from None


def _check_task(cfg: dict, expected: str):
    task = cfg.get("task", expected)
    if task != expected:
        raise ConfigError(f"task: config is for {task!r}, not {expected!r}")


def run_seq(name: str, precision: int, ring: Ring, out=None) -> int:
    out = out or sys.stdout
    if precision < 1:
        raise ConfigError("precision must be >= 1")
    try:
        s = named_series(name, precision, ring)
    except KeyError as exc:
        raise ConfigError(exc.args[0]) from None
    for line in bfile_lines(s.coeffs, ring):
        print(line, file=out)
    return 0


def run_solve(cfg: dict, out=None) -> int:
    """Solve, print ``precision`` terms, then a residual comment line.

    Named coefficients are expanded at ``precision``; the solution is known
    to ``precision + order`` terms and the residual to ``precision``.
    """
    out = out or sys.stdout
    _check_task(cfg, "solve")
    ring = _ring(cfg)
    prec = _precision(cfg)
    if "ode" not in cfg:
        raise ConfigError("ode: missing")
    eq = ode_from_dict(cfg["ode"], ring, prec)
    initials = cfg.get("initials")
    if not isinstance(initials, list) or len(initials) != eq.order:
        raise ConfigError(f"initials: expected a list of {eq.order} values, got {initials!r}")
    try:
        init = [ring.convert(c) for c in initials]
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"initials: {exc}") from None
    y = solve(eq, init)
    for line in bfile_lines(y.coeffs[:prec], ring):
        print(line, file=out)
    r = residual(eq, y)
    bad = [j for j, c in enumerate(r.coeffs) if c != 0]
    if bad:
        print(f"# residual nonzero at index {bad[0]}", file=out)
        return 1
    print(f"# residual verified zero through index {r.precision - 1}", file=out)
    return 0


def run_egf(cfg: dict, out=None) -> int:
    """Transport between Hurwitz sequences and EGF coefficients.

    ``direction`` is ``"to"`` (default: Hurwitz -> EGF) or ``"from"``.
    """
    out = out or sys.stdout
    _check_task(cfg, "egf")
    ring = _ring(cfg)
    direction = cfg.get("direction", "to")
    if "series" not in cfg:
        raise ConfigError("series: missing")
    if direction == "to":
        prec = _precision(cfg) if "precision" in cfg else None
        spec = cfg["series"]
        if prec is None and isinstance(spec, str):
            raise ConfigError("precision: required for a named series")
        result = to_egf(series_from_spec(spec, ring, prec or 0)).coeffs
    elif direction == "from":
        result = from_egf(egf_from_dict(cfg["series"], ring)).coeffs
    else:
        raise ConfigError(f"direction: expected 'to' or 'from', got {direction!r}")
    for line in bfile_lines(result, ring):
        print(line, file=out)
    return 0


def run_check(suite: str, seed: int, cases: int, out=None) -> int:
    out = out or sys.stdout
    names = list(checks.SUITES) if suite == "all" else [suite]
    status = 0
    for name in names:
        try:
            res = checks.run_suite(name, seed, cases)
        except KeyError as exc:
            raise ConfigError(exc.args[0]) from None
        print(f"{res.line()} (seed {seed})", file=out)
        if not res.ok:
            status = 1
    return status


def run_config(cfg: dict, out=None) -> int:
    out = out or sys.stdout
    task = cfg.get("task")
    if task not in TASKS:
        raise ConfigError(f"task: expected one of {', '.join(TASKS)}, got {task!r}")
    if task == "seq":
        if not isinstance(cfg.get("series"), str):
            raise ConfigError("series: expected a series name")
        return run_seq(cfg["series"], _precision(cfg), _ring(cfg), out)
    if task == "solve":
        return run_solve(cfg, out)
    if task == "egf":
        return run_egf(cfg, out)
    return run_check(cfg.get("suite", "all"), cfg.get("seed", _default_seed()), cfg.get("cases", 200), out)


def _default_seed() -> int:
    env = os.environ.get("HURWITZ_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ConfigError(f"HURWITZ_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hurwitz", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", help="print a named sequence as a b-file")
    s.add_argument("name", help="one of: " + ", ".join(sorted(NAMED)))
    s.add_argument("precision", type=int)
    s.add_argument("--ring", default="integers", help="integers, rationals or mod:M")

    s = sub.add_parser("solve", help="solve a monic linear ODE from a JSON config")
    s.add_argument("config")

    s = sub.add_parser("egf", help="convert to or from exponential generating functions")
    s.add_argument("config")

    s = sub.add_parser("check", help="run a randomized identity suite")
    s.add_argument("suite", help="'all' or one of: " + ", ".join(checks.SUITES))
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--cases", type=int, default=200)

    s = sub.add_parser("run", help="run a JSON job config (dispatches on 'task')")
    s.add_argument("config")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "seq":
            return run_seq(args.name, args.precision, parse_ring(args.ring))
        if args.command == "solve":
            return run_solve(load_config(args.config))
        if args.command == "egf":
            return run_egf(load_config(args.config))
        if args.command == "check":
            seed = args.seed if args.seed is not None else _default_seed()
            return run_check(args.suite, seed, args.cases)
        return run_config(load_config(args.config))
    except ConfigError as exc:
        print(f"hurwitz: error: {exc}", file=sys.stderr)
        return 2
    except HurwitzError as exc:
        print(f"hurwitz: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
