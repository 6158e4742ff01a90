"""Command-line front end: evaluation, gamma-family values, tables,
series-vs-quadrature comparison, and the verification harness.

Output discipline: data rows go to stdout (or the --out file), diagnostics
go to stderr.  The plain format prints values with repr (shortest
round-trip form); csv and json formats print every float with 17
significant digits so the exact double is recoverable.  Exit codes:
0 success, 2 usage or domain error, 3 numerical non-convergence,
4 verification failure.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys

import click

from .errors import (
    DomainError,
    InvalidParameter,
    NonConvergence,
    Overflow,
    QuadratureFailure,
)
from .integral import (
    IntegralRepParams,
    eval_w_bessel_kernel,
    eval_w_cos,
    eval_w_cosh,
)
from .kbessel import KBesselParams, SeriesConfig, deriv_w, eval_w
from .kgamma import (
    k_beta,
    k_digamma,
    k_gamma,
    k_pochhammer,
    k_trigamma,
    ln_k_gamma,
)
from .verify import CHECK_NAMES, GridSpec, default_grid, run_grid

_USAGE_ERRORS = (InvalidParameter, DomainError)
_NUMERIC_ERRORS = (NonConvergence, Overflow, QuadratureFailure)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    raise SystemExit(code)


def _fmt17(value: float) -> str:
    """17-significant-digit form used by csv/json output."""
    return format(float(value), ".17g")


def _json_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt17(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        inner = ", ".join(f"{json.dumps(k)}: {_json_value(v)}"
                          for k, v in value.items())
        return "{" + inner + "}"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _json_line(pairs) -> str:
    return "{" + ", ".join(f"{json.dumps(key)}: {_json_value(value)}"
                           for key, value in pairs) + "}"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt17(value)
    if isinstance(value, dict):
        return _json_value(value)
    return str(value)


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _csv_lines(header: list[str], rows: list[list]) -> list[str]:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(cell) for cell in row])
    return buffer.getvalue().splitlines()


def _table_lines(fmt: str, header: list[str], rows: list[list]) -> list[str]:
    if fmt == "csv":
        return _csv_lines(header, rows)
    if fmt == "json":
        return [_json_line(zip(header, row)) for row in rows]
    lines = [" ".join(header)]
    for row in rows:
        lines.append(" ".join("" if cell is None else repr(cell)
                              if isinstance(cell, float) else str(cell)
                              for cell in row))
    return lines


def _parse_x_list(text: str) -> list[float]:
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            raise click.BadParameter(f"empty entry in x list {text!r}")
        try:
            values.append(float(piece))
        except ValueError:
            raise click.BadParameter(f"not a number: {piece!r}")
    return values


@click.group()
def main() -> None:
    """Generalized k-Bessel evaluation and verification tools."""


@main.command("eval")
@click.option("--k", type=float, required=True, help="Positive deformation parameter.")
@click.option("--nu", type=float, required=True, help="Order; must exceed -k.")
@click.option("--c", type=float, required=True, help="Sign/scale parameter of the series.")
@click.option("--x", "x_text", type=str, required=True,
              help="Argument: a number or a comma-separated list.")
@click.option("--deriv", type=int, default=0, show_default=True,
              help="Derivative order m (0 evaluates the function itself).")
@click.option("--tol", type=float, default=1e-14, show_default=True,
              help="Relative truncation tolerance of the series.")
@click.option("--max-terms", type=int, default=500, show_default=True,
              help="Series term cap.")
@click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]),
              default="plain", show_default=True)
@click.option("--out", type=str, default=None, help="Write output to this file.")
def cmd_eval(k: float, nu: float, c: float, x_text: str, deriv: int,
             tol: float, max_terms: int, fmt: str, out: str | None) -> None:
    """Evaluate the series (or its m-th derivative) at one or more points."""
    xs = _parse_x_list(x_text)
    try:
        params = KBesselParams(k, nu, c)
        cfg = SeriesConfig(rel_tol=tol, max_terms=max_terms)
        rows = []
        for x in xs:
            if deriv > 0:
                result = deriv_w(params, x, deriv, cfg)
            else:
                result = eval_w(params, x, cfg)
            rows.append([x, result.value, result.terms_used, result.est_error])
    except _USAGE_ERRORS as exc:
        _fail(2, str(exc))
    except _NUMERIC_ERRORS as exc:
        _fail(3, str(exc))
    header = ["x", "value", "terms_used", "est_error"]
    _emit(_table_lines(fmt, header, rows), out)


_GAMMA_ARG_SPECS = {
    "gamma": ("t",),
    "lngamma": ("t",),
    "digamma": ("t",),
    "trigamma": ("t",),
    "beta": ("x", "y"),
    "pochhammer": ("t", "n"),
}


@main.command("gamma")
@click.option("--fn", type=click.Choice(sorted(_GAMMA_ARG_SPECS)), required=True,
              help="Which member of the gamma family to evaluate.")
@click.option("--t", type=float, default=None, help="Argument for gamma/lngamma/digamma/trigamma/pochhammer.")
@click.option("--n", type=int, default=None, help="Factor count for pochhammer.")
@click.option("--x", type=float, default=None, help="First beta argument.")
@click.option("--y", type=float, default=None, help="Second beta argument.")
@click.option("--k", type=float, required=True, help="Positive deformation parameter.")
@click.option("--out", type=str, default=None, help="Write output to this file.")
def cmd_gamma(fn: str, t: float | None, n: int | None, x: float | None,
              y: float | None, k: float, out: str | None) -> None:
    """Evaluate one gamma-family value and print it via repr."""
    need = _GAMMA_ARG_SPECS[fn]
    given = {"t": t, "n": n, "x": x, "y": y}
    missing = [name for name in need if given[name] is None]
    if missing:
        _fail(2, f"--fn {fn} requires --" + " --".join(missing))
    try:
        if fn == "gamma":
            value = k_gamma(t, k)
        elif fn == "lngamma":
            value = ln_k_gamma(t, k)
        elif fn == "digamma":
            value = k_digamma(t, k)
        elif fn == "trigamma":
            value = k_trigamma(t, k)
        elif fn == "beta":
            value = k_beta(x, y, k)
        else:
            value = k_pochhammer(t, n, k)
    except _USAGE_ERRORS as exc:
        _fail(2, str(exc))
    except _NUMERIC_ERRORS as exc:
        _fail(3, str(exc))
    _emit([repr(value)], out)


@main.command("table")
@click.option("--k", type=float, required=True)
@click.option("--nu", type=float, required=True)
@click.option("--c", type=float, required=True)
@click.option("--x-start", type=float, required=True)
@click.option("--x-stop", type=float, required=True)
@click.option("--x-steps", type=int, required=True)
@click.option("--tol", type=float, default=1e-14, show_default=True)
@click.option("--max-terms", type=int, default=500, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]),
              default="plain", show_default=True)
@click.option("--out", type=str, default=None)
def cmd_table(k: float, nu: float, c: float, x_start: float, x_stop: float,
              x_steps: int, tol: float, max_terms: int, fmt: str,
              out: str | None) -> None:
    """Tabulate the function and its normalized form over an x grid.

    Columns: x, the function value, the normalized value (series rescaled
    to start at 1), and the truncation-error estimate.  The header appears
    exactly once and the row count equals --x-steps.
    """
    if x_steps < 1:
        _fail(2, f"--x-steps must be at least 1, got {x_steps}")
    if x_steps == 1:
        xs = [x_start]
    else:
        span = x_stop - x_start
        xs = [x_start + span * i / (x_steps - 1) for i in range(x_steps)]
    try:
        params = KBesselParams(k, nu, c)
        cfg = SeriesConfig(rel_tol=tol, max_terms=max_terms)
        rows = []
        for x in xs:
            result = eval_w(params, x, cfg)
            if nu == 0.0:
                normalized = result.value
            elif x == 0.0:
                normalized = 1.0
            else:
                normalized = result.value * math.exp(
                    ln_k_gamma(nu + k, k) - (nu / k) * math.log(0.5 * x))
            rows.append([x, result.value, normalized, result.est_error])
    except _USAGE_ERRORS as exc:
        _fail(2, str(exc))
    except _NUMERIC_ERRORS as exc:
        _fail(3, str(exc))
    header = ["x", "value", "normalized", "est_error"]
    _emit(_table_lines(fmt, header, rows), out)


def _load_grid_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        _fail(2, f"cannot read grid file {path!r}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(2, f"grid file {path!r} is not valid JSON: {exc}")
    if not isinstance(payload, dict):
        _fail(2, f"grid file {path!r} must hold a JSON object of arrays")
    return payload


_GRID_FIELDS = ("k_values", "nu_values", "c_values", "alpha_values",
                "x_values", "a_values", "cvx_weights")


def _grid_from_option(grid: str) -> GridSpec:
    if grid == "default":
        return default_grid()
    payload = _load_grid_file(grid)
    base = {field: list(getattr(default_grid(), field))
            for field in _GRID_FIELDS}
    for key, values in payload.items():
        if key not in _GRID_FIELDS:
            _fail(2, f"unknown grid field {key!r}; known fields: "
                     + ", ".join(_GRID_FIELDS))
        if (not isinstance(values, list)
                or not all(isinstance(v, (int, float)) and
                           not isinstance(v, bool) for v in values)):
            _fail(2, f"grid field {key!r} must be an array of numbers")
        base[key] = values
    try:
        return GridSpec(**base)
    except InvalidParameter as exc:
        _fail(2, str(exc))


_COMPARE_BETAS = (-0.4, 0.0, 0.5, 1.0, 2.5)


@main.command("compare-integral")
@click.option("--grid", type=str, default="default", show_default=True,
              help="'default' or a JSON file with k_values/nu_values/"
                   "alpha_values/x_values arrays.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", type=str, default=None)
def cmd_compare_integral(grid: str, fmt: str, out: str | None) -> None:
    """Compare quadrature routes against the series point by point.

    Emits one row per admissible (k, nu, alpha, x, route) combination with
    both values and their difference; inadmissible routes are omitted.
    """
    if grid == "default":
        k_values = (0.5, 1.0, 2.0)
        nu_by_k = {k: tuple(beta * k for beta in _COMPARE_BETAS)
                   for k in k_values}
        alpha_values = (0.5, 1.0, 2.0)
        x_values = (0.25, 1.0, 3.0)
    else:
        payload = _load_grid_file(grid)
        for key in ("k_values", "nu_values", "alpha_values", "x_values"):
            if key not in payload:
                _fail(2, f"grid file must define {key!r}")
        k_values = tuple(sorted(float(v) for v in payload["k_values"]))
        nu_by_k = {k: tuple(float(v) for v in payload["nu_values"])
                   for k in k_values}
        alpha_values = tuple(sorted(float(v) for v in payload["alpha_values"]))
        x_values = tuple(sorted(float(v) for v in payload["x_values"]))

    rows = []
    try:
        for k in k_values:
            for nu in sorted(nu_by_k[k]):
                for alpha in alpha_values:
                    for x in x_values:
                        rep = IntegralRepParams(k, nu, alpha, x)
                        c_sq = alpha * alpha
                        legs = []
                        if nu / k > -0.5:
                            legs.append(("cos", c_sq,
                                         eval_w_cos(rep)))
                            legs.append(("cosh", -c_sq,
                                         eval_w_cosh(rep)))
                        if nu > 0.0:
                            kernel_rep = IntegralRepParams(k, nu, 1.0, x)
                            legs.append(("kernel", c_sq,
                                         eval_w_bessel_kernel(kernel_rep, c_sq)))
                            legs.append(("kernel", -c_sq,
                                         eval_w_bessel_kernel(kernel_rep, -c_sq)))
                        for route, c, integral_value in legs:
                            series_value = eval_w(KBesselParams(k, nu, c), x).value
                            rows.append([k, nu, alpha, x, route, c,
                                         series_value, integral_value,
                                         integral_value - series_value])
    except _USAGE_ERRORS as exc:
        _fail(2, str(exc))
    except _NUMERIC_ERRORS as exc:
        _fail(3, str(exc))
    header = ["k", "nu", "alpha", "x", "route", "c", "series", "integral",
              "diff"]
    if fmt == "csv":
        lines = _csv_lines(header, rows)
    else:
        lines = [_json_line(zip(header, row)) for row in rows]
    _emit(lines, out)


@main.command("verify")
@click.option("--checks", type=str, default="all", show_default=True,
              help="'all' or a comma-separated list of check names.")
@click.option("--grid", type=str, default="default", show_default=True,
              help="'default' or a JSON file of explicit grid arrays.")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]),
              default="jsonl", show_default=True)
@click.option("--out", type=str, default=None)
def cmd_verify(checks: str, grid: str, fmt: str, out: str | None) -> None:
    """Run certification checks over a grid and report each point.

    Exits 0 when every non-skipped check passes and 4 otherwise; a summary
    goes to stderr.
    """
    if checks == "all":
        names = list(CHECK_NAMES)
    else:
        names = [piece.strip() for piece in checks.split(",") if piece.strip()]
        if not names:
            _fail(2, "--checks must name at least one check")
    spec = _grid_from_option(grid)
    try:
        reports = run_grid(spec, names)
    except _USAGE_ERRORS as exc:
        _fail(2, str(exc))
    header = ["check_name", "grid_point", "margin", "passed", "skipped",
              "notes"]
    if fmt == "csv":
        rows = [[r.check_name, r.grid_point, r.margin, r.passed, r.skipped,
                 r.notes] for r in reports]
        lines = _csv_lines(header, rows)
    else:
        lines = [_json_line([
            ("check_name", r.check_name),
            ("grid_point", r.grid_point),
            ("margin", r.margin),
            ("passed", r.passed),
            ("skipped", r.skipped),
            ("notes", r.notes),
        ]) for r in reports]
    _emit(lines, out)
    failed = sum(1 for r in reports if not r.passed and not r.skipped)
    skipped = sum(1 for r in reports if r.skipped)
    passed = len(reports) - failed - skipped
    click.echo(f"{len(reports)} reports: {passed} passed, {skipped} skipped, "
               f"{failed} failed", err=True)
    if failed:
        raise SystemExit(4)


if __name__ == "__main__":
    main()
