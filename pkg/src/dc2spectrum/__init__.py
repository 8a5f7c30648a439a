"""Autocorrelation, spectra and low-frequency weights of dc2-balanced block codes."""

from .asymptotic import (
    approx_count_dc2,
    corrected_cubic_autocorrelation,
    cubic_autocorrelation,
    lfsw_dc2,
    prior_art_autocorrelation,
)
from .clt_model import (
    clt_autocorrelation,
    clt_pair_correlation,
    compute_checks,
    corrected_clt_autocorrelation,
    correction_coefficients,
)
from .curves import autocorrelation_by_method
from .dc_baseline import autocorrelation_dc, count_dc, lfsw_dc, spectrum_dc_closed_form
from .exact_oracle import (
    build_count_table,
    count_dc2,
    enumerate_s2,
    exact_autocorrelation,
    exact_pair_correlation,
    pair_count,
)
from .model import (
    Autocorrelation,
    Codeword,
    DomainError,
    Method,
    ResourceGuardError,
    complement,
    is_dc2_balanced,
    make_autocorrelation,
    reverse,
)
from .spectral_design import (
    db_ratio,
    find_intersection,
    lfsw_from_autocorrelation,
    match_lengths,
    rate_dc,
    rate_dc2,
    spectrum_from_autocorrelation,
    verify_null_conditions,
)

__version__ = "0.1.0"
