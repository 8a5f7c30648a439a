"""Dispatch from a method tag to the autocorrelation it names."""

from __future__ import annotations

from .asymptotic import (
    corrected_cubic_autocorrelation,
    cubic_autocorrelation,
    prior_art_autocorrelation,
)
from .clt_model import clt_autocorrelation, corrected_clt_autocorrelation
from .dc_baseline import autocorrelation_dc
from .exact_oracle import exact_autocorrelation
from .model import Autocorrelation, Method

__all__ = ["autocorrelation_by_method"]


def autocorrelation_by_method(method: Method | str, n: int, expensive: bool = False) -> Autocorrelation:
    """Autocorrelation of length ``n`` for ``method``; ``dc1`` reads ``n`` as ``n1``."""
    method = Method(method)
    if method is Method.EXACT:
        return exact_autocorrelation(n, expensive=expensive)
    builders = {
        Method.CLT: clt_autocorrelation,
        Method.CLT_CORRECTED: corrected_clt_autocorrelation,
        Method.CUBIC: cubic_autocorrelation,
        Method.CUBIC_CORRECTED: corrected_cubic_autocorrelation,
        Method.PRIOR_ART: prior_art_autocorrelation,
        Method.DC1: autocorrelation_dc,
    }
    return builders[method](n)
