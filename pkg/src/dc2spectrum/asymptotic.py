"""Closed-form large-n approximations for full dc2-balanced codes."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Autocorrelation, DomainError, Method, make_autocorrelation

__all__ = [
    "CUBIC_ROOTS",
    "COUNT_REFINEMENT",
    "CubicCorrection",
    "PriorArtParams",
    "cubic_correction",
    "prior_art_params",
    "cubic_value",
    "cubic_value_factored",
    "cubic_autocorrelation",
    "corrected_cubic_autocorrelation",
    "lfsw_dc2",
    "prior_art_autocorrelation",
    "approx_count_dc2",
]

# roots of i^2 + i*n - n^2 in units of n
CUBIC_ROOTS = ((-1 - math.sqrt(5)) / 2, (-1 + math.sqrt(5)) / 2)
# empirical first-order refinement of the codeword-count asymptote
COUNT_REFINEMENT = 1.211


@dataclass(frozen=True)
class CubicCorrection:
    n: int
    a: float
    b: float


@dataclass(frozen=True)
class PriorArtParams:
    n: int
    alpha: float
    beta: float


def _require_n(n: int, minimum: int = 4):
    if n < minimum:
        raise DomainError(f"n must be >= {minimum}, got n={n}")


def cubic_correction(n: int) -> CubicCorrection:
    """Affine term that makes the cubic satisfy both null conditions exactly."""
    _require_n(n)
    a = -(6 * n * n - n + 2) / (2 * (n - 2) * n**3)
    b = (4 * n**3 - 2 * n * n + n - 2) / (n**4 * (n - 1) * (n - 2))
    return CubicCorrection(n, a, b)


def prior_art_params(n: int) -> PriorArtParams:
    _require_n(n)
    alpha = -(3 * n * n - 2) / (5 * n)
    beta = -15 / ((n - 1) * (n - 2) * (4 * n + 3))
    return PriorArtParams(n, alpha, beta)


def cubic_value(n: int, i: float) -> float:
    return 2 * (n - i) * (i * i + i * n - n * n) / n**4


def cubic_value_factored(n: int, i: float) -> float:
    c0, c1 = CUBIC_ROOTS
    return 2 / n**4 * (n - i) * (i - c0 * n) * (i - c1 * n)


def cubic_autocorrelation(n: int) -> Autocorrelation:
    _require_n(n)
    return make_autocorrelation(n, (cubic_value(n, i) for i in range(1, n)), Method.CUBIC)


def corrected_cubic_autocorrelation(n: int) -> Autocorrelation:
    corr = cubic_correction(n)
    values = (cubic_value(n, i) + corr.a + corr.b * i for i in range(1, n))
    return make_autocorrelation(n, values, Method.CUBIC_CORRECTED)


def lfsw_dc2(n: int) -> tuple[float, float]:
    """Low-frequency spectral weight of the corrected cubic.

    Returns the finite sum ``sum i^4 rho'(i) / 12`` and its large-n
    asymptote ``n^4 (1 + 4/n) / 720``.
    """
    rho = corrected_cubic_autocorrelation(n)
    chi = math.fsum(i**4 * v for i, v in enumerate(rho.values, start=1)) / 12
    return chi, n**4 / 720 * (1 + 4 / n)


def prior_art_autocorrelation(n: int) -> Autocorrelation:
    """Parabolic autocorrelation model from earlier work, kept as a baseline."""
    pa = prior_art_params(n)
    values = (pa.beta * (i + pa.alpha) * (i - n) for i in range(1, n))
    return make_autocorrelation(n, values, Method.PRIOR_ART)


def approx_count_dc2(n: int, refined: bool = False) -> float:
    if n < 4 or n % 4:
        raise DomainError(f"n must be a positive multiple of 4, got n={n}")
    try:
        value = math.ldexp(4 * math.sqrt(3) / (math.pi * n * n), n)
    except OverflowError:
        raise OverflowError(f"2**{n} codeword-count estimate exceeds double range") from None
    if refined:
        value *= 1 - COUNT_REFINEMENT / n
    return value
