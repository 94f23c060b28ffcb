"""Command-line interface: ``qmu eval``, ``qmu suite`` and ``qmu grid``."""

from __future__ import annotations

import csv
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from typing import Callable, Optional

import click

from . import fib, hyper, mu, qcore, rr
from .numerics import EPS, DEFAULT_POLICY, NonConvergent, PoleHit, QSeriesError, near_lattice
from .qcore import LATTICE_DELTA
from .suite import DEFAULT_Q, TOL_PROFILES, run_suite

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_EVAL = 3


# -- literals ------------------------------------------------------------------

_Q_POWER = re.compile(r"^q(?:\^(?P<p>[-+]?\d+(?:\.\d*)?))?$")


def parse_complex(text: str, q: Optional[complex] = None) -> complex:
    """Parse "1.5", "-2", "0.3+0.1i", "2i", "q" or "q^p" (p numeric)."""
    s = text.strip().replace(" ", "")
    m = _Q_POWER.match(s)
    if m:
        if q is None:
            raise ValueError(f"{text!r} refers to q, which is not known here")
        p = m.group("p")
        if p is None:
            return complex(q)
        power = float(p)
        return complex(q) ** (int(power) if power.is_integer() else power)
    if s.endswith("i") or s.endswith("j"):
        s = s[:-1] + "j"
    try:
        return complex(s)
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as a number (use forms like 1.5 or 0.3+0.1i)") from None


def parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"expected an integer, got {text!r}") from None


def format_complex(z: complex) -> str:
    if z.imag == 0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 or math.isnan(z.imag) else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


# -- evaluable functions -----------------------------------------------------------

@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "c" complex, "i" int, "s" string
    default: Optional[str] = None
    lattice: bool = False  # value on q^Z is a pole


@dataclass(frozen=True)
class Function:
    call: Callable
    params: tuple[Param, ...]


def _c(name, default=None, lattice=False):
    return Param(name, "c", default, lattice)


def _i(name, default=None):
    return Param(name, "i", default)


def _s(name, default):
    return Param(name, "s", default)


Q = _c("q")

FUNCTIONS: dict[str, Function] = {
    "qpoch": Function(lambda x, q, n, policy: qcore.qpoch(x, q, math.inf if n is None else n, policy),
                      (_c("x"), Q, Param("n", "i", "inf"))),
    "theta": Function(lambda x, q, rep, policy: qcore.theta(x, q, rep, policy), (_c("x", lattice=True), Q, _s("rep", "product"))),
    "qbinom": Function(lambda alpha, beta, q, policy: qcore.qbinom(alpha, beta, q, policy), (_c("alpha"), _c("beta"), Q)),
    "eta": Function(lambda q, policy: qcore.eta(q, policy), (Q,)),
    "phi01": Function(lambda z, q, policy: hyper.phi01(z, q, policy), (_c("z"), Q)),
    "ramanujan_entire": Function(lambda z, q, policy: hyper.ramanujan_entire(z, q, policy), (_c("z"), Q)),
    "little_mu": Function(lambda x, y, q, rep, policy: mu.little_mu(x, y, q, rep, policy),
                          (_c("x", lattice=True), _c("y", lattice=True), Q, _s("rep", "definition"))),
    "little_mu_limit": Function(lambda x, q, policy: mu.little_mu_limit_rhs(x, q, policy), (_c("x", lattice=True), Q)),
    "generalized_mu": Function(lambda x, y, m, q, policy: mu.generalized_mu(x, y, m, q, policy),
                               (_c("x", lattice=True), _c("y", lattice=True), _i("m"), Q)),
    "zwegers_mu": Function(lambda x, y, q, policy: mu.zwegers_mu(x, y, q, policy),
                           (_c("x", lattice=True), _c("y", lattice=True), Q)),
    "M": Function(lambda n, x, q, rep, policy: mu.M(n, x, q, rep, policy),
                  (_i("n"), _c("x", lattice=True), Q, _s("rep", "series"))),
    "S": Function(lambda t, q, n, policy: fib.S(t, q, n), (_c("t"), Q, _i("n"))),
    "T": Function(lambda t, q, n, policy: fib.T(t, q, n), (_c("t"), Q, _i("n"))),
    "S_closed": Function(lambda t, q, n, policy: fib.S_closed(t, q, n), (_c("t"), Q, _i("n"))),
    "T_closed": Function(lambda t, q, n, policy: fib.T_closed(t, q, n), (_c("t"), Q, _i("n"))),
    "G": Function(lambda q, rep, policy: rr.G(q, rep, policy), (Q, _s("rep", "sum"))),
    "H": Function(lambda q, rep, policy: rr.H(q, rep, policy), (Q, _s("rep", "sum"))),
    "R": Function(lambda q, rep, policy: rr.R(q, rep, policy), (Q, _s("rep", "ratio"))),
    "rr_quadratic": Function(lambda q, policy: rr.rr_quadratic(q, policy), (Q,)),
    "iz_u": Function(lambda a, x, q, policy: rr.iz_u(a, x, q, policy), (_c("a"), _c("x"), Q)),
}


def parse_params(fn: Function, raw: dict[str, str]) -> dict:
    """Convert raw ``--name value`` strings; q is parsed first so others may refer to it."""
    known = {p.name for p in fn.params}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ValueError(f"unknown parameter(s): {', '.join(unknown)}; expected {sorted(known)}")
    out: dict = {}
    q = None
    if "q" in known:
        if "q" not in raw:
            raise ValueError("missing parameter --q")
        q = parse_complex(raw["q"])
        if not abs(q) < 1:
            raise ValueError(f"|q| must be < 1, got {raw['q']!r}")
    for p in fn.params:
        text = raw.get(p.name, p.default)
        if text is None:
            raise ValueError(f"missing parameter --{p.name}")
        if p.kind == "c":
            out[p.name] = q if p.name == "q" else parse_complex(text, q)
        elif p.kind == "i":
            out[p.name] = None if text == "inf" else parse_int(text)
        else:
            out[p.name] = text
    return out


def evaluate(name: str, args: dict) -> tuple[complex, float]:
    """Value and error estimate (difference from a tighter truncation plus rounding)."""
    fn = FUNCTIONS[name]
    q = args.get("q")
    for p in fn.params:
        if p.lattice and q is not None:
            v = args[p.name]
            if v == 0 or near_lattice(v, q, LATTICE_DELTA) is not None:
                raise PoleHit(f"{p.name} = {format_complex(complex(v))} lies on the q-lattice")
    value = complex(fn.call(**args, policy=DEFAULT_POLICY))
    tight = complex(fn.call(**args, policy=DEFAULT_POLICY.tighter(2.0**8)))
    err = max(abs(value - tight), 4 * EPS * abs(value))
    return value, err


def _split_options(tokens: list[str]) -> dict[str, str]:
    raw: dict[str, str] = {}
    it = iter(tokens)
    for tok in it:
        if not tok.startswith("--"):
            raise click.UsageError(f"unexpected argument {tok!r}; parameters are given as --name value")
        key, eq, val = tok[2:].partition("=")
        if not eq:
            try:
                val = next(it)
            except StopIteration:
                raise click.UsageError(f"option --{key} needs a value") from None
        raw[key.replace("-", "_")] = val
    return raw


def _check_precision() -> None:
    prec = os.environ.get("QMU_PRECISION", "f64")
    if prec != "f64":
        raise click.UsageError(f"QMU_PRECISION={prec!r} is not supported; only 'f64' is available")


# -- commands -------------------------------------------------------------------

@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Verified q-series numerics."""


_PASSTHROUGH = {"ignore_unknown_options": True, "allow_extra_args": True}


@cli.command("eval", context_settings=_PASSTHROUGH)
@click.argument("function", type=click.Choice(sorted(FUNCTIONS)))
@click.pass_context
def eval_cmd(ctx, function):
    """Evaluate FUNCTION; parameters follow as --name value (e.g. --q 0.2 --x 0.5+0.1i)."""
    _check_precision()
    try:
        args = parse_params(FUNCTIONS[function], _split_options(ctx.args))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    try:
        value, err = evaluate(function, args)
    except PoleHit as exc:
        click.echo(f"PoleHit: {exc}", err=True)
        ctx.exit(EXIT_EVAL)
    except NonConvergent as exc:
        click.echo(f"NonConvergent: {exc}", err=True)
        ctx.exit(EXIT_EVAL)
    except QSeriesError as exc:
        click.echo(f"{type(exc).__name__}: {exc}", err=True)
        ctx.exit(EXIT_EVAL)
    click.echo(f"{format_complex(value)}\terr={err:.3e}")


def _q_list(ctx, param, values):
    out = []
    for v in values:
        for part in v.split(","):
            if part.strip():
                try:
                    q = float(part)
                except ValueError:
                    raise click.BadParameter(f"{part!r} is not a real number") from None
                if not 0 < q < 1:
                    raise click.BadParameter(f"suite q values must lie in (0, 1), got {q}")
                out.append(q)
    return tuple(out) or DEFAULT_Q


@cli.command("suite")
@click.option("--q", "q_values", multiple=True, callback=_q_list,
              help="q values (repeat or comma-separate); default 0.15,0.25,0.35.")
@click.option("--points", default=20, show_default=True, type=click.IntRange(min=0))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--tol-profile", default="default", show_default=True, type=click.Choice(sorted(TOL_PROFILES)))
@click.option("--report", "fmt", default="text", show_default=True, type=click.Choice(["json", "text"]))
@click.option("--only", multiple=True, help="Restrict to these identity ids.")
@click.pass_context
def suite_cmd(ctx, q_values, points, seed, tol_profile, fmt, only):
    """Run every registered identity over seeded random points."""
    _check_precision()
    from .suite import REGISTRY

    bad = sorted(set(only) - set(REGISTRY))
    if bad:
        raise click.BadParameter(f"unknown identity id(s): {', '.join(bad)}", param_hint="--only")
    header, reports = run_suite(q_values, points, seed, tol_profile, only or None)
    if fmt == "json":
        click.echo(json.dumps({"header": header, "identities": [r.as_dict() for r in reports]}, indent=2))
    else:
        click.echo(f"q={','.join(map(str, header['q_values']))} points={points} seed={seed} profile={tol_profile}")
        for r in reports:
            line = (f"{r.status.upper():4s}  {r.identity_id:28s} tested={r.points_tested:<4d} "
                    f"skipped={r.points_skipped:<3d} max_rel={r.max_rel_residual:.2e} tol={r.tolerance:.0e}")
            if r.note:
                line += f"  [{r.note}]"
            click.echo(line)
    if any(r.status == "fail" for r in reports):
        ctx.exit(EXIT_FAIL)


@cli.command("grid", context_settings=_PASSTHROUGH)
@click.argument("function", type=click.Choice(sorted(FUNCTIONS)))
@click.option("--var", required=True, help="Parameter to vary.")
@click.option("--from", "start", required=True)
@click.option("--to", "stop", required=True)
@click.option("--steps", required=True, type=click.IntRange(min=1))
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.pass_context
def grid_cmd(ctx, function, var, start, stop, steps, out_path):
    """Evaluate FUNCTION along a straight segment in one parameter and write CSV."""
    _check_precision()
    fn = FUNCTIONS[function]
    raw = _split_options(ctx.args)
    spec = {p.name: p for p in fn.params}
    if var not in spec or spec[var].kind != "c" or var == "q":
        raise click.BadParameter(f"{var!r} is not a complex parameter of {function}", param_hint="--var")
    raw[var] = "0"  # placeholder so the other parameters parse
    try:
        base = parse_params(fn, raw)
        a = parse_complex(start, base.get("q"))
        b = parse_complex(stop, base.get("q"))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    try:
        handle = open(out_path, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise click.UsageError(f"cannot write {out_path}: {exc.strerror}") from None
    with handle:
        writer = csv.writer(handle)
        writer.writerow([f"{var}_re", f"{var}_im", "result_re", "result_im", "err", "status"])
        for k in range(steps):
            v = a if steps == 1 else a + (b - a) * k / (steps - 1)
            args = dict(base, **{var: v})
            try:
                value, err = evaluate(function, args)
                row = [repr(v.real), repr(v.imag), repr(value.real), repr(value.imag), repr(err), "ok"]
            except PoleHit:
                row = [repr(v.real), repr(v.imag), "", "", "", "pole"]
            except QSeriesError:
                row = [repr(v.real), repr(v.imag), "", "", "", "nonconvergent"]
            writer.writerow(row)


def main() -> None:  # pragma: no cover
    cli(prog_name="qmu")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
