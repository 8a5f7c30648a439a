"""Command-line front end emitting CSV or JSON tables.

Exit status: 0 success, 2 usage error, 3 domain error, 4 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Any, Sequence

import numpy as np

from .asymptotic import approx_count_dc2, lfsw_dc2
from .clt_model import compute_checks, correction_coefficients
from .curves import autocorrelation_by_method
from .dc_baseline import count_dc, lfsw_dc, spectrum_dc_closed_form
from .exact_oracle import MEMORY_BUDGET_ENV, count_dc2, exact_autocorrelation
from .model import DomainError, Method, ResourceGuardError
from .spectral_design import (
    DEFAULT_GRID_POINTS,
    SpectrumCurve,
    db_ratio,
    default_grid,
    find_intersection,
    lfsw_from_autocorrelation,
    match_lengths,
    rate_dc,
    rate_dc2,
    spectrum_from_autocorrelation,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4

COMMANDS = ("autocorr", "spectrum", "lfsw", "count", "checks", "rates", "match", "intersect", "table1", "table2")
TABLE1_LENGTHS = (32, 64, 128, 256)
TABLE2_RATES = (0.90, 0.92, 0.94, 0.96, 0.98)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    n1: int | None = None
    method: str | None = None
    reference: str | None = None
    order: str = "second"
    rate: float | None = None
    grid_points: int = DEFAULT_GRID_POINTS
    format: str = "csv"
    expensive: bool = False
    out: str | None = None


@dataclass
class Table:
    columns: list[str]
    rows: list[tuple]


def _fmt(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return v if math.isfinite(v) else None
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.bool_):
        return bool(v)
    return v


def render(table: Table, config: RunConfig) -> str:
    if config.format == "json":
        meta = {k: v for k, v in asdict(config).items() if k != "out"}
        data = {c: [_jsonable(r[j]) for r in table.rows] for j, c in enumerate(table.columns)}
        return json.dumps({"meta": meta, "data": data}, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    return value


def _method(config: RunConfig, default: str, allow_dc1: bool = True) -> Method:
    m = Method(config.method or default)
    if m is Method.DC1 and not allow_dc1:
        raise UsageError("method dc1 is not valid for this command")
    return m


def _length(config: RunConfig, method: Method) -> int:
    if method is Method.DC1:
        return _need(config.n1 if config.n1 is not None else config.n, "--n1")
    return _need(config.n, "--n")


def _spectrum(method: Method, n: int, omegas: np.ndarray, expensive: bool) -> SpectrumCurve:
    if method is Method.DC1:
        return SpectrumCurve(omegas, spectrum_dc_closed_form(n, omegas), method)
    return spectrum_from_autocorrelation(autocorrelation_by_method(method, n, expensive), omegas)


def _cmd_autocorr(config: RunConfig) -> Table:
    method = _method(config, "clt-corrected")
    n = _length(config, method)
    rho = autocorrelation_by_method(method, n, config.expensive)
    if config.reference is None:
        return Table(["i", "rho"], [(i, v) for i, v in enumerate(rho.values, start=1)])
    ref = autocorrelation_by_method(config.reference, n, config.expensive)
    rows = [(i / n, abs(v - r)) for i, (v, r) in enumerate(zip(rho.values, ref.values), start=1)]
    return Table(["i_over_n", "abs_diff"], rows)


def _cmd_spectrum(config: RunConfig) -> Table:
    method = _method(config, "cubic-corrected")
    n = _length(config, method)
    omegas = default_grid(config.grid_points)
    curve = _spectrum(method, n, omegas, config.expensive)
    if config.reference is None:
        return Table(["omega", "H", "negative"], list(zip(omegas, curve.values, curve.negative)))
    ref = _spectrum(Method(config.reference), n, omegas, config.expensive)
    ratio = db_ratio(curve, ref)
    return Table(["omega", "db", "excluded"], list(zip(omegas, ratio.db, ratio.excluded)))


def _cmd_lfsw(config: RunConfig) -> Table:
    method = _method(config, "cubic-corrected")
    n = _length(config, method)
    if method is Method.DC1:
        return Table(["n1", "method", "chi"], [(n, method.value, lfsw_dc(n))])
    rho = autocorrelation_by_method(method, n, config.expensive)
    return Table(["n", "method", "chi"], [(n, method.value, lfsw_from_autocorrelation(rho))])


def _cmd_count(config: RunConfig) -> Table:
    if config.order == "first":
        n1 = _need(config.n1 if config.n1 is not None else config.n, "--n1")
        exact, asym = count_dc(n1)
        return Table(["n1", "exact", "asymptotic"], [(n1, exact, asym)])
    n = _need(config.n, "--n")
    return Table(
        ["n", "exact", "approx", "approx_refined"],
        [(n, count_dc2(n), approx_count_dc2(n), approx_count_dc2(n, refined=True))],
    )


def _cmd_checks(config: RunConfig) -> Table:
    method = _method(config, "clt", allow_dc1=False)
    n = _length(config, method)
    rho = autocorrelation_by_method(method, n, config.expensive)
    a0, a1 = compute_checks(rho)
    fit = correction_coefficients(n, a0, a1)
    return Table(["n", "method", "a0", "a1", "a", "b"], [(n, method.value, a0, a1, fit.a, fit.b)])


def _cmd_rates(config: RunConfig) -> Table:
    if config.n is None and config.n1 is None:
        raise UsageError("rates needs --n and/or --n1")
    rows = []
    if config.n1 is not None:
        rows.append(("first", config.n1, rate_dc(config.n1)))
    if config.n is not None:
        rows.append(("second", config.n, rate_dc2(config.n)))
    return Table(["order", "length", "rate"], rows)


def _cmd_match(config: RunConfig) -> Table:
    rate = _need(config.rate, "--rate")
    n1, n = match_lengths(rate)
    return Table(["rate", "n1", "n"], [(rate, n1, n)])


def _cmd_intersect(config: RunConfig) -> Table:
    method = _method(config, "cubic-corrected", allow_dc1=False)
    if config.rate is not None:
        n1, n = match_lengths(config.rate)
    else:
        n1, n = _need(config.n1, "--n1"), _need(config.n, "--n")
    rho = autocorrelation_by_method(method, n, config.expensive)
    omega, level = find_intersection(n1, n, rho)
    return Table(["n1", "n", "omega_cross", "level_db"], [(n1, n, omega, level)])


def _cmd_table1(config: RunConfig) -> Table:
    rows = []
    for n in TABLE1_LENGTHS:
        chi, asym = lfsw_dc2(n)
        chi_hat = None
        if n <= 128 or config.expensive:
            chi_hat = lfsw_from_autocorrelation(exact_autocorrelation(n, expensive=config.expensive))
        rows.append((n, chi, asym, chi_hat))
    return Table(["n", "chi_prime", "chi_prime_asymptotic", "chi_hat"], rows)


def _cmd_table2(config: RunConfig) -> Table:
    rows = []
    for rate in TABLE2_RATES:
        n1, n = match_lengths(rate)
        omega, level = find_intersection(n1, n)
        rows.append((rate, n1, n, rate_dc(n1), rate_dc2(n), omega, level))
    return Table(["rate", "n1", "n", "rate_dc", "rate_dc2", "omega_cross", "level_db"], rows)


_HANDLERS = {
    "autocorr": _cmd_autocorr,
    "spectrum": _cmd_spectrum,
    "lfsw": _cmd_lfsw,
    "count": _cmd_count,
    "checks": _cmd_checks,
    "rates": _cmd_rates,
    "match": _cmd_match,
    "intersect": _cmd_intersect,
    "table1": _cmd_table1,
    "table2": _cmd_table2,
}


def run(config: RunConfig) -> tuple[int, str]:
    """Execute ``config``; return the exit status and the emitted document (or error text)."""
    try:
        if config.command not in _HANDLERS:
            raise UsageError(f"unknown command {config.command!r}")
        if config.format not in ("csv", "json"):
            raise UsageError(f"unknown format {config.format!r}")
        if config.grid_points < 1:
            raise UsageError("--grid-points must be positive")
        for m in (config.method, config.reference):
            if m is not None and m not in {x.value for x in Method}:
                raise UsageError(f"unknown method {m!r}")
        table = _HANDLERS[config.command](config)
    except UsageError as e:
        return EXIT_USAGE, f"usage error: {e}\n"
    except ResourceGuardError as e:
        return EXIT_RESOURCE, f"resource guard: {e}\n"
    except (DomainError, OverflowError) as e:
        return EXIT_DOMAIN, f"domain error: {e}\n"
    return EXIT_OK, render(table, config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dc2spectrum",
        description="Autocorrelation, spectra and LFSW of dc2-balanced block codes.",
        epilog=f"Exit status: 0 ok, 2 usage, 3 domain, 4 resource guard. "
        f"{MEMORY_BUDGET_ENV} sets the exact-oracle memory budget in bytes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    methods = [m.value for m in Method]

    def common(p, *, method=False, reference=False, grid=False):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="output file (default: standard output)")
        p.add_argument("--expensive", action="store_true", help="allow exact computations beyond n=128")
        if method:
            p.add_argument("--method", choices=methods)
        if reference:
            p.add_argument("--reference", choices=methods, help="emit the deviation from this method")
        if grid:
            p.add_argument("--grid-points", type=int, default=DEFAULT_GRID_POINTS)

    p = sub.add_parser("autocorr", help="autocorrelation rho(i), or |rho - reference| versus i/n")
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    common(p, method=True, reference=True)

    p = sub.add_parser("spectrum", help="spectrum H(omega), or dB ratio against a reference")
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    common(p, method=True, reference=True, grid=True)

    p = sub.add_parser("lfsw", help="low-frequency spectral weight")
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    common(p, method=True)

    p = sub.add_parser("count", help="exact and approximate codebook sizes")
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--order", choices=("first", "second"), default="second")
    common(p)

    p = sub.add_parser("checks", help="null-condition residuals and correction coefficients")
    p.add_argument("--n", type=int, required=True)
    common(p, method=True)

    p = sub.add_parser("rates", help="maximum information rates")
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    common(p)

    p = sub.add_parser("match", help="equal-rate code lengths")
    p.add_argument("--rate", type=float, required=True)
    common(p)

    p = sub.add_parser("intersect", help="crossing of equal-rate dc and dc2 spectra")
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--rate", type=float)
    common(p, method=True)

    p = sub.add_parser("table1", help="LFSW of the corrected cubic versus the exact full set")
    common(p)

    p = sub.add_parser("table2", help="equal-rate lengths with spectral intersection levels")
    common(p)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(args).items() if k in fields})


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    config = _config_from_args(args)
    status, text = run(config)
    if status != EXIT_OK:
        sys.stderr.write(text)
        return status
    if config.out:
        with open(config.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
