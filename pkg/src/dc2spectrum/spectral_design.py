"""Spectra from autocorrelations, low-frequency weights, and equal-rate design.

Spectra are cosine series ``H(w) = 1 + 2 sum_i rho(i) cos(i w)``, valid for
codebooks closed under complementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .asymptotic import corrected_cubic_autocorrelation
from .dc_baseline import spectrum_dc_closed_form
from .model import Autocorrelation, DomainError, Method

__all__ = [
    "DEFAULT_GRID_POINTS",
    "SCAN_POINTS",
    "EXCLUDE_FLOOR",
    "SpectrumCurve",
    "DbCurve",
    "NullReport",
    "DesignPoint",
    "default_grid",
    "spectrum_from_autocorrelation",
    "lfsw_from_autocorrelation",
    "verify_null_conditions",
    "db_ratio",
    "rate_dc2",
    "rate_dc",
    "match_lengths",
    "find_intersection",
    "design_point",
]

DEFAULT_GRID_POINTS = 4096
SCAN_POINTS = 10_000
EXCLUDE_FLOOR = 1e-300
_BISECT_TOL = 1e-10
_CHUNK = 1 << 22


@dataclass(frozen=True)
class SpectrumCurve:
    omegas: np.ndarray
    values: np.ndarray
    method: Method

    def __post_init__(self):
        if self.omegas.shape != self.values.shape or self.omegas.ndim != 1:
            raise DomainError("frequency grid and spectrum values must be 1-D of equal length")
        if self.omegas.size > 1 and np.any(np.diff(self.omegas) <= 0):
            raise DomainError("frequency grid must be strictly increasing")

    @property
    def negative(self) -> np.ndarray:
        """Mask of grid points where an approximate spectrum went negative."""
        return self.values < 0

    @property
    def has_negative(self) -> bool:
        return bool(np.any(self.negative))

    def db(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(self.values > 0, 10 * np.log10(np.abs(self.values)), np.nan)


@dataclass(frozen=True)
class DbCurve:
    omegas: np.ndarray
    db: np.ndarray
    excluded: np.ndarray = field(repr=False)

    def max_abs(self) -> float:
        valid = ~self.excluded
        return float(np.max(np.abs(self.db[valid]))) if np.any(valid) else math.nan


@dataclass(frozen=True)
class NullReport:
    order: int
    residuals: tuple[float, ...]
    tol: float
    passed: bool


@dataclass(frozen=True)
class DesignPoint:
    rate_target: float
    n1: int
    n: int
    omega_cross: float
    level_db: float


def default_grid(points: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    """Uniform grid of ``points`` frequencies on ``(0, pi]``."""
    if points < 1:
        raise DomainError("grid needs at least one point")
    return np.pi * np.arange(1, points + 1) / points


def _cosine_series(values: np.ndarray, omegas: np.ndarray) -> np.ndarray:
    lags = np.arange(1, values.size + 1, dtype=float)
    out = np.empty(omegas.size)
    step = max(1, _CHUNK // max(1, values.size))
    for start in range(0, omegas.size, step):
        w = omegas[start:start + step]
        out[start:start + step] = 1.0 + 2.0 * (np.cos(np.outer(w, lags)) @ values)
    return out


def spectrum_from_autocorrelation(rho: Autocorrelation, omegas=None) -> SpectrumCurve:
    w = default_grid() if omegas is None else np.asarray(omegas, dtype=float).ravel()
    return SpectrumCurve(w, _cosine_series(np.asarray(rho.values), w), rho.method)


def lfsw_from_autocorrelation(rho: Autocorrelation) -> float:
    """Coefficient of ``omega**4`` in the spectrum of a second-order null code."""
    return math.fsum(i**4 * v for i, v in enumerate(rho.values, start=1)) / 12


def verify_null_conditions(rho: Autocorrelation, order: int = 2, tol: float = 1e-12) -> NullReport:
    if order not in (1, 2):
        raise DomainError(f"order must be 1 or 2, got {order}")
    residuals = [math.fsum(rho.values) + 0.5]
    if order == 2:
        residuals.append(math.fsum(i * i * v for i, v in enumerate(rho.values, start=1)))
    return NullReport(order, tuple(residuals), tol, all(abs(r) <= tol for r in residuals))


def db_ratio(numerator: SpectrumCurve, denominator: SpectrumCurve) -> DbCurve:
    """Pointwise ``10 log10(numerator / denominator)``.

    Points where either spectrum is at or below ``EXCLUDE_FLOOR`` are
    marked in ``excluded`` and carry NaN.
    """
    if numerator.omegas.shape != denominator.omegas.shape or not np.array_equal(
        numerator.omegas, denominator.omegas
    ):
        raise DomainError("spectra must share an identical frequency grid")
    excluded = (numerator.values <= EXCLUDE_FLOOR) | (denominator.values <= EXCLUDE_FLOOR)
    with np.errstate(divide="ignore", invalid="ignore"):
        db = np.where(excluded, np.nan, 10 * np.log10(numerator.values / denominator.values))
    return DbCurve(numerator.omegas, db, excluded)


def rate_dc2(n: int) -> float:
    """Maximum rate of the full dc2-balanced code, from the unrefined count asymptote."""
    if n < 4 or n % 4:
        raise DomainError(f"n must be a positive multiple of 4, got n={n}")
    return 1 - math.log2(math.pi * n * n / (4 * math.sqrt(3))) / n


def rate_dc(n1: int) -> float:
    if n1 < 2 or n1 % 2:
        raise DomainError(f"n1 must be even and >= 2, got n1={n1}")
    return 1 - math.log2(math.pi / 2 * n1) / (2 * n1)


def match_lengths(rate_target: float) -> tuple[int, int]:
    """Shortest dc (even) and dc2 (multiple of 4) lengths reaching ``rate_target``."""
    if not 0 < rate_target < 1:
        raise DomainError(f"rate target must lie in (0, 1), got {rate_target}")
    n1 = 2
    while rate_dc(n1) < rate_target:
        n1 += 2
    n = 4
    while rate_dc2(n) < rate_target:
        n += 4
    return n1, n


def find_intersection(n1: int, n: int, rho_dc2: Autocorrelation | None = None) -> tuple[float, float]:
    """First crossing of the dc and dc2 spectra above zero frequency.

    Returns ``(omega, level_db)`` where ``level_db`` is the common spectrum
    level in dB. ``rho_dc2`` defaults to the corrected cubic for length ``n``.
    """
    if rho_dc2 is None:
        rho_dc2 = corrected_cubic_autocorrelation(n)
    elif rho_dc2.n != n:
        raise DomainError(f"autocorrelation has n={rho_dc2.n}, expected {n}")
    values = np.asarray(rho_dc2.values)

    def gap(w: np.ndarray) -> np.ndarray:
        return spectrum_dc_closed_form(n1, w) - _cosine_series(values, w)

    scan = np.linspace(0.0, np.pi, SCAN_POINTS + 2)[1:-1]
    g = gap(scan)
    flips = np.nonzero(np.sign(g[:-1]) * np.sign(g[1:]) <= 0)[0]
    if flips.size == 0:
        raise DomainError(f"dc (n1={n1}) and dc2 (n={n}) spectra do not cross on (0, pi)")
    k = flips[0]
    lo, hi = scan[k], scan[k + 1]
    g_lo = g[k]
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        g_mid = gap(np.array([mid]))[0]
        if g_mid == 0:
            lo = hi = mid
            break
        if np.sign(g_mid) == np.sign(g_lo):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    omega = float(0.5 * (lo + hi))
    level = float(spectrum_dc_closed_form(n1, omega))
    return omega, 10 * math.log10(level)


def design_point(rate_target: float, rho_dc2: Autocorrelation | None = None) -> DesignPoint:
    n1, n = match_lengths(rate_target)
    omega, level = find_intersection(n1, n, rho_dc2)
    return DesignPoint(rate_target, n1, n, omega, level)
