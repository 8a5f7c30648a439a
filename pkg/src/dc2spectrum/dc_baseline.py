"""First-order (dc-balanced) full-set codes, the comparison baseline."""

from __future__ import annotations

import math

import numpy as np

from .model import Autocorrelation, DomainError, Method, make_autocorrelation

__all__ = [
    "SMALL_OMEGA",
    "count_dc",
    "autocorrelation_dc",
    "spectrum_dc_closed_form",
    "lfsw_dc",
]

# below this the closed form is replaced by its leading Taylor term
SMALL_OMEGA = 1e-8


def _require_even(n1: int):
    if n1 < 2 or n1 % 2:
        raise DomainError(f"dc-balanced codes need an even length n1 >= 2, got n1={n1}")


def count_dc(n1: int) -> tuple[int, float]:
    """Exact central binomial coefficient and its large-n1 asymptote."""
    _require_even(n1)
    return math.comb(n1, n1 // 2), math.ldexp(1 / math.sqrt(math.pi * n1 / 2), n1)


def autocorrelation_dc(n1: int) -> Autocorrelation:
    _require_even(n1)
    scale = n1 * (n1 - 1)
    return make_autocorrelation(n1, ((i - n1) / scale for i in range(1, n1)), Method.DC1)


def spectrum_dc_closed_form(n1: int, omega):
    """Spectrum of the full dc-balanced set at ``omega`` (scalar or array, radians)."""
    _require_even(n1)
    w = np.asarray(omega, dtype=float)
    small = np.abs(w) < SMALL_OMEGA
    safe = np.where(small, 1.0, w)
    ratio = np.sin(n1 * safe / 2) / (n1 * np.sin(safe / 2))
    h = n1 / (n1 - 1) * (1 - ratio * ratio)
    h = np.where(small, lfsw_dc(n1) * w * w, h)
    return float(h) if h.ndim == 0 else h


def lfsw_dc(n1: int) -> float:
    """Coefficient of ``omega**2`` in the low-frequency expansion of the spectrum."""
    _require_even(n1)
    return n1 * (n1 + 1) / 12
