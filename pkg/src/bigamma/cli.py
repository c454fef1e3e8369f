"""
Command-line front end.

    bigamma eval 2 2 --z 0.3
    bigamma table --xs 0.5,1,2 --ys 0.5,1,2
    bigamma coeffs --kind GAMMA_LN --max-m 13 --max-n 13 --out gln.txt
    bigamma series 1.2 0.9 --order 12 --table gln.txt
    bigamma verify --grid "x=1;y=1" --format json

Exit codes: 0 success, 1 usage or domain error (and, for ``verify``, any
FAIL verdict), 2 when a quadrature did not converge (INCONCLUSIVE).

Tolerances come from ``--abs-tol/--rel-tol/--max-level`` or from the
``BIGAMMA_ABS_TOL``, ``BIGAMMA_REL_TOL`` and ``BIGAMMA_MAX_LEVEL`` environment
variables; a flag wins over the environment.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
from dataclasses import replace

import click

from .bounds import DEFAULT_GRID, GridSpec, run_suite
from .checks import Verdict
from .core import bigamma, incomplete
from .errors import BigammaError
from .gamma_ref import beta
from .loglog import TableKind, build_table, load_table, save_table
from .quad import DEFAULT_CONFIG, EvalConfig
from .series import TRUST_RADIUS, beta_series, bigamma_series

__all__ = ["cli", "main"]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2

FORMATS = ("human", "csv", "json")
DEMO_AXIS = "0.5,1,2"


# ------------------------------------------------------------- serialization


def fmt_float(v) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "nan"
    return format(float(v), ".17g")


def _json(obj) -> str:
    """Deterministic JSON: fixed key order, 17 significant digits, nan -> null."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{_json(str(k))}: {_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _emit(fmt: str, header, rows, human_lines=None):
    if fmt == "csv":
        click.echo(_csv(header, rows), nl=False)
    elif fmt == "json":
        recs = [dict(zip(header, row)) for row in rows]
        click.echo(_json(recs))
    else:
        for line in human_lines or []:
            click.echo(line)


# ------------------------------------------------------------------- options


def _parse_list(text: str, what: str) -> list[float]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    if not items:
        raise click.UsageError(f"{what} is empty")
    try:
        return [float(s) for s in items]
    except ValueError:
        raise click.UsageError(f"{what} must be a comma-separated list of numbers, got {text!r}") from None


def tolerance_options(f):
    f = click.option("--max-level", type=int, envvar="BIGAMMA_MAX_LEVEL", default=None,
                     help="Quadrature refinement cap.")(f)
    f = click.option("--rel-tol", type=float, envvar="BIGAMMA_REL_TOL", default=None,
                     help="Relative tolerance.")(f)
    f = click.option("--abs-tol", type=float, envvar="BIGAMMA_ABS_TOL", default=None,
                     help="Absolute tolerance.")(f)
    return f


def _config(abs_tol, rel_tol, max_level) -> EvalConfig:
    changes = {k: v for k, v in (("abs_tol", abs_tol), ("rel_tol", rel_tol), ("max_level", max_level))
               if v is not None}
    return replace(DEFAULT_CONFIG, **changes)


def _format_option(default="human"):
    return click.option("--format", "fmt", type=click.Choice(FORMATS), default=default, show_default=True)


# ------------------------------------------------------------------ commands


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Bigamma function evaluation, coefficient tables and verification."""


@cli.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("x", type=float)
@click.argument("y", type=float)
@click.option("--z", type=float, default=None, help="Also report Gamma_z and I_z.")
@_format_option()
@tolerance_options
def cmd_eval(x, y, z, fmt, abs_tol, rel_tol, max_level):
    """Evaluate Gamma(X, Y)."""
    cfg = _config(abs_tol, rel_tol, max_level)
    g = bigamma(x, y, cfg)
    header = ["x", "y", "value", "err", "converged"]
    row = [x, y, g.value, g.err_estimate, g.converged]
    lines = [f"Gamma({x:g}, {y:g}) = {g.value:.17g}  (err {g.err_estimate:.3g}, converged={g.converged})"]
    ok = g.converged
    if z is not None:
        gz = incomplete(x, y, z, cfg)
        iz = gz.value / g.value
        iz_err = (gz.err_estimate + abs(iz) * g.err_estimate) / g.value
        header += ["z", "incomplete", "incomplete_err", "ratio", "ratio_err"]
        row += [z, gz.value, gz.err_estimate, iz, iz_err]
        lines.append(f"Gamma_z = {gz.value:.17g}  (err {gz.err_estimate:.3g}) at z={z:g}")
        lines.append(f"I_z     = {iz:.17g}  (err {iz_err:.3g})")
        ok = ok and gz.converged
    _emit(fmt, header, [row], lines)
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


@cli.command("table")
@click.option("--xs", default=DEMO_AXIS, show_default=True, help="Comma-separated x values.")
@click.option("--ys", default=DEMO_AXIS, show_default=True, help="Comma-separated y values.")
@_format_option("csv")
@tolerance_options
def cmd_table(xs, ys, fmt, abs_tol, rel_tol, max_level):
    """Tabulate Gamma(x, y) over a grid."""
    cfg = _config(abs_tol, rel_tol, max_level)
    xv, yv = _parse_list(xs, "--xs"), _parse_list(ys, "--ys")
    rows = []
    for x in xv:
        for y in yv:
            g = bigamma(x, y, cfg)
            rows.append([x, y, g.value, g.err_estimate, g.converged])
    lines = [f"{x:>8g} {y:>8g}  {v:.17g}  {e:.2g}{'' if c else '  (not converged)'}" for x, y, v, e, c in rows]
    _emit(fmt, ["x", "y", "value", "err", "converged"], rows, lines)
    return EXIT_OK if all(r[4] for r in rows) else EXIT_INCONCLUSIVE


@cli.command("coeffs")
@click.option("--kind", type=click.Choice([k.value for k in TableKind], case_sensitive=False),
              default=TableKind.GAMMA_LN.value, show_default=True)
@click.option("--max-m", type=int, required=True)
@click.option("--max-n", type=int, required=True)
@click.option("--out", "out", type=click.Path(dir_okay=False), required=True)
@click.option("--force", is_flag=True, help="Overwrite an existing file.")
@tolerance_options
def cmd_coeffs(kind, max_m, max_n, out, force, abs_tol, rel_tol, max_level):
    """Build a coefficient table and save it."""
    if os.path.exists(out) and not force:
        raise click.UsageError(f"{out} exists; pass --force to overwrite")
    cfg = _config(abs_tol, rel_tol, max_level)
    table = build_table(kind.upper(), max_m, max_n, cfg)
    save_table(table, out)
    click.echo(f"wrote {out}: kind={table.kind.value} entries={len(table)} "
               f"max_err={table.max_err():.3g} failed={len(table.failed)}")
    return EXIT_OK if not table.failed else EXIT_INCONCLUSIVE


@cli.command("series", context_settings={"ignore_unknown_options": True})
@click.argument("x", type=float)
@click.argument("y", type=float)
@click.option("--order", type=int, default=12, show_default=True)
@click.option("--table", "table_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Coefficient table; built in memory when omitted.")
@click.option("--which", type=click.Choice(["gamma", "beta"]), default="gamma", show_default=True)
@_format_option()
@tolerance_options
def cmd_series(x, y, order, table_path, which, fmt, abs_tol, rel_tol, max_level):
    """Compare a truncated series against the direct value."""
    cfg = _config(abs_tol, rel_tol, max_level)
    kind = TableKind.GAMMA_LN if which == "gamma" else TableKind.BIGAMMA_INT
    if max(abs(x - 1.0), abs(y - 1.0)) > TRUST_RADIUS:
        raise click.UsageError(f"({x:g}, {y:g}) lies outside the series trust radius {TRUST_RADIUS} around (1, 1)")
    if table_path:
        table = load_table(table_path, kind)
    else:
        table = build_table(kind, order + 1, order + 1, cfg)
    if which == "gamma":
        est = bigamma_series(x, y, order, table)
        r = bigamma(x, y, cfg)
        ref, ref_ok = r.value, r.converged
    else:
        est = beta_series(x, y, order, table)
        ref, ref_ok = beta(x, y), True
    dev = abs(est.value - ref)
    rel = dev / abs(ref)
    header = ["x", "y", "which", "order", "series", "reference", "abs_dev", "rel_dev", "last_shell", "coeff_err"]
    row = [x, y, which, order, est.value, ref, dev, rel, est.last_shell_magnitude, est.coeff_err_bound]
    lines = [
        f"series     {est.value:.17g}  (order {order}, {which})",
        f"reference  {ref:.17g}",
        f"deviation  {dev:.3g} abs, {rel:.3g} rel",
        f"last shell {est.last_shell_magnitude:.3g}, coefficient error <= {est.coeff_err_bound:.3g}",
    ]
    _emit(fmt, header, [row], lines)
    return EXIT_OK if ref_ok and not table.failed else EXIT_INCONCLUSIVE


@cli.command("verify")
@click.option("--grid", "grid_spec", default=None, help='Grid like "x=0.5,1;y=1,2;p=0.5"; default grid if omitted.')
@click.option("--checks", default=None, help="Comma-separated check names (default: all).")
@_format_option()
@click.option("--fail-fast", is_flag=True)
@click.option("--workers", type=int, default=1, show_default=True)
@tolerance_options
def cmd_verify(grid_spec, checks, fmt, fail_fast, workers, abs_tol, rel_tol, max_level):
    """Run the inequality and identity suite."""
    cfg = _config(abs_tol, rel_tol, max_level)
    grid = DEFAULT_GRID if grid_spec is None else GridSpec.from_string(grid_spec)
    which = None if checks is None else [c.strip() for c in checks.split(",") if c.strip()]
    report = run_suite(grid, which, cfg, workers=workers, fail_fast=fail_fast)
    records = [r.as_record() for r in report.results]
    summary = report.summary()
    if fmt == "json":
        click.echo(_json({"records": records, "summary": summary}))
    elif fmt == "csv":
        rows = [[r.name, ";".join(f"{k}={fmt_float(v)}" for k, v in r.point), r.lhs, r.rhs,
                 r.relation.value, r.margin, r.tol, r.verdict.value] for r in report.results]
        click.echo(_csv(["check", "point", "lhs", "rhs", "relation", "margin", "tol", "verdict"], rows), nl=False)
    else:
        for r in report.results:
            if r.verdict is not Verdict.PASS:
                pt = ", ".join(f"{k}={v:g}" for k, v in r.point)
                click.echo(f"{r.verdict.value:<12} {r.name}({pt}): lhs={r.lhs:.10g} rhs={r.rhs:.10g} "
                           f"margin={r.margin:.3g} tol={r.tol:.3g}")
        click.echo(" ".join(f"{k}={v}" for k, v in summary.items()))
    return EXIT_OK if report.ok else EXIT_ERROR


def main(argv=None) -> int:
    """Entry point: runs the group and maps errors onto the exit-code contract."""
    try:
        rv = cli.main(args=argv, prog_name="bigamma", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_ERROR
    except click.ClickException as exc:
        exc.show()
        return EXIT_ERROR
    except (BigammaError, KeyError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_ERROR
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
