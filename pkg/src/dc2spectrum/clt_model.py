"""Central-limit approximation of pair correlations in full dc2-balanced codes.

Weight ``c`` and index sum ``p`` of a random word with ones forced at two
positions are treated as jointly Gaussian; evaluating that density at the
dc2-balanced targets approximates how many codewords have both ones, and
therefore the pair correlation. All ``n**4``-scale polynomial terms are
formed as exact integers before a single floating division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Autocorrelation, DomainError, Method, make_autocorrelation

__all__ = [
    "ApproximationError",
    "CltIntermediates",
    "CorrectionFit",
    "clt_intermediates",
    "clt_pair_correlation",
    "clt_autocorrelation",
    "clt_range_violations",
    "compute_checks",
    "correction_coefficients",
    "apply_correction",
    "corrected_clt_autocorrelation",
    "power_sums",
]


class ApproximationError(DomainError):
    """The Gaussian approximation breaks down (``1 + r1 <= 0``)."""


@dataclass(frozen=True)
class CltIntermediates:
    n: int
    i0: int
    i1: int
    mu_c: float
    mu_p: float
    sigma_c2: float
    sigma_p2: float
    gauss_r2: float
    gamma: int
    delta: int
    r1: float
    r2: float
    phi1_sq: float
    phi2: float


@dataclass(frozen=True)
class CorrectionFit:
    n: int
    a0: float
    a1: float
    a: float
    b: float


def _check_positions(n: int, i0: int, i1: int):
    if n < 4:
        raise DomainError(f"n must be >= 4, got {n}")
    if not (1 <= i0 <= n and 1 <= i1 <= n):
        raise DomainError(f"positions must lie in 1..{n}, got ({i0}, {i1})")
    if i0 == i1:
        raise DomainError("pair correlation needs two distinct positions")


def _numerators(n: int, i0: int, i1: int) -> tuple[int, int, int, int]:
    gamma = 12 * n * ((i0 - n - 1) * i0 + (i1 - n - 1) * i1)
    delta = (i0 - i1) ** 2
    # r1 = -num1 / n^4, r2 = num2 / (8 n^3)
    num1 = 8 * n**3 + 13 * n**2 + 4 * n + gamma - 12 * delta
    num2 = 12 * n**2 + 4 * n + gamma - 6 * (n + 2) * delta
    return gamma, delta, num1, num2


def clt_intermediates(n: int, i0: int, i1: int) -> CltIntermediates:
    _check_positions(n, i0, i1)
    gamma, delta, num1, num2 = _numerators(n, i0, i1)
    s = i0 + i1
    q = i0 * i0 + i1 * i1
    r2_num = 3 * (n * n + n - 2 * s) ** 2
    r2_den = 2 * (n - 2) * (2 * n**3 + 3 * n**2 + n - 6 * q)
    return CltIntermediates(
        n=n,
        i0=i0,
        i1=i1,
        mu_c=(n - 2) / 2 + 2,
        mu_p=n * (n + 1) / 4 + s / 2,
        sigma_c2=(n - 2) / 4,
        sigma_p2=(n * (n + 1) * (2 * n + 1) - 6 * q) / 24,
        gauss_r2=r2_num / r2_den,
        gamma=gamma,
        delta=delta,
        r1=-num1 / n**4,
        r2=num2 / (8 * n**3),
        phi1_sq=(n**4 - num1) / 192,
        phi2=(8 * n**3 + num2) / (n**4 - num1),
    )


def clt_pair_correlation(n: int, i0: int, i1: int) -> float:
    """Approximate codebook-average of ``x'_{i0} x'_{i1}``.

    Depends on the positions only through the reversal-invariant integers
    ``gamma`` and ``delta``, so ``(i0, i1)`` and ``(n+1-i0, n+1-i1)`` give
    bit-identical results.
    """
    _check_positions(n, i0, i1)
    _, _, num1, num2 = _numerators(n, i0, i1)
    one_plus_r1 = n**4 - num1
    if one_plus_r1 <= 0:
        raise ApproximationError(f"1 + r1 <= 0 at n={n}, ({i0}, {i1})")
    # (8/n)(1+r2)/(1+r1) collapses to one integer ratio
    phi2 = (8 * n**3 + num2) / one_plus_r1
    return math.exp(-phi2) / math.sqrt(one_plus_r1 / n**4) - 1.0


def _require_clt_length(n: int):
    if n < 8 or n % 4:
        raise DomainError(f"CLT autocorrelation needs n >= 8 with n mod 4 = 0, got n={n}")


def _clt_values(n: int) -> list[float]:
    return [
        math.fsum(clt_pair_correlation(n, j, j + i) for j in range(1, n - i + 1)) / n
        for i in range(1, n)
    ]


def clt_autocorrelation(n: int) -> Autocorrelation:
    _require_clt_length(n)
    return make_autocorrelation(n, _clt_values(n), Method.CLT)


def clt_range_violations(n: int) -> list[tuple[int, int, float]]:
    """Pairs whose approximate correlation falls outside ``[-1, 1]``."""
    out = []
    for i0 in range(1, n):
        for i1 in range(i0 + 1, n + 1):
            r = clt_pair_correlation(n, i0, i1)
            if not -1.0 <= r <= 1.0:
                out.append((i0, i1, r))
    return out


def compute_checks(rho: Autocorrelation) -> tuple[float, float]:
    """Residuals ``(sum rho + 1/2, sum i^2 rho)`` of the two null conditions."""
    # compensated sums: the i^2 weights reach n^2 and would amplify rounding
    s0 = math.fsum(rho.values)
    s2 = math.fsum(i * i * v for i, v in enumerate(rho.values, start=1))
    return s0 + 0.5, s2


def power_sums(n: int) -> tuple[int, int, int]:
    """``sum i``, ``sum i^2``, ``sum i^3`` over ``i = 1..n-1``."""
    m = n - 1
    s1 = m * n // 2
    return s1, m * n * (2 * m + 1) // 6, s1 * s1


def correction_coefficients(n: int, a0: float, a1: float) -> CorrectionFit:
    """Affine term ``a + b*i`` cancelling the check residuals ``a0``, ``a1``."""
    if n < 3:
        raise DomainError(f"correction needs n >= 3, got n={n}")
    a = -3 * (n * (n - 1) * a0 - 2 * a1) / (n * (n - 1) * (n - 2))
    b = 2 * (n * (2 * n - 1) * a0 - 6 * a1) / (n * n * (n - 1) * (n - 2))
    return CorrectionFit(n, a0, a1, a, b)


def apply_correction(rho: Autocorrelation, method: Method | str) -> tuple[Autocorrelation, CorrectionFit]:
    a0, a1 = compute_checks(rho)
    fit = correction_coefficients(rho.n, a0, a1)
    values = [v + fit.a + fit.b * i for i, v in enumerate(rho.values, start=1)]
    return make_autocorrelation(rho.n, values, method), fit


def corrected_clt_autocorrelation(n: int) -> Autocorrelation:
    corrected, _ = apply_correction(clt_autocorrelation(n), Method.CLT_CORRECTED)
    return corrected
