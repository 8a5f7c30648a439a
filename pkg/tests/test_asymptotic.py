import math
from fractions import Fraction

import pytest

from dc2spectrum.asymptotic import (
    CUBIC_ROOTS,
    approx_count_dc2,
    corrected_cubic_autocorrelation,
    cubic_autocorrelation,
    cubic_correction,
    cubic_value,
    cubic_value_factored,
    lfsw_dc2,
    prior_art_autocorrelation,
    prior_art_params,
)
from dc2spectrum.clt_model import compute_checks, correction_coefficients
from dc2spectrum.exact_oracle import count_dc2, exact_autocorrelation
from dc2spectrum.model import DomainError, Method

ALL_N = list(range(8, 257, 8))


def test_cubic_examples():
    assert cubic_autocorrelation(4).at(2) == pytest.approx(-0.0625, abs=1e-15)
    assert cubic_value(16, 16) == 0
    c0, c1 = CUBIC_ROOTS
    assert c0 * c1 == pytest.approx(-1, abs=1e-15)
    assert c0 + c1 == pytest.approx(-1, abs=1e-15)


@pytest.mark.parametrize("n", ALL_N)
def test_factorizations_agree(n):
    for i in range(1, n):
        assert abs(cubic_value(n, i) - cubic_value_factored(n, i)) < 1e-14


@pytest.mark.parametrize("n", [8, 32, 256])
def test_uncorrected_cubic_checks(n):
    a0, a1 = compute_checks(cubic_autocorrelation(n))
    assert abs(a0 - (1 / n - 1 / (2 * n * n))) < 1e-10
    assert abs(a1 - (-1 / 6 + 1 / (6 * n * n))) < 1e-10


@pytest.mark.parametrize("n", [4, 8, 16, 32, 100, 256])
def test_cubic_correction_closed_form(n):
    # exact rational residuals of the cubic fed through the generic correction
    a0 = Fraction(1, n) - Fraction(1, 2 * n * n)
    a1 = Fraction(-1, 6) + Fraction(1, 6 * n * n)
    fit = correction_coefficients(n, float(a0), float(a1))
    corr = cubic_correction(n)
    assert corr.a == pytest.approx(fit.a, rel=1e-12)
    assert corr.b == pytest.approx(fit.b, rel=1e-12)
    if n >= 16:
        assert corr.a == pytest.approx(-3 / n**2, rel=4 / n)
        assert corr.b == pytest.approx(4 / n**3, rel=4 / n)


@pytest.mark.parametrize("n", [4] + ALL_N)
def test_corrected_cubic_null_conditions(n):
    rho = corrected_cubic_autocorrelation(n)
    assert rho.method is Method.CUBIC_CORRECTED
    a0, a1 = compute_checks(rho)
    assert abs(a0) < 1e-12 and abs(a1) < 1e-12


@pytest.mark.parametrize(
    "n, expected, tol",
    [(32, 1629.48, 0.01), (64, 24723.13, 0.01), (128, 384339.75, 0.01), (256, 6057889.79, 0.5)],
)
def test_table1_chi_prime(n, expected, tol):
    chi, _ = lfsw_dc2(n)
    assert abs(chi - expected) <= tol


def test_chi_asymptote_gap_shrinks():
    gaps = []
    for n in (32, 64, 128, 256):
        chi, asym = lfsw_dc2(n)
        assert asym == pytest.approx(n**4 / 720 * (1 + 4 / n))
        gaps.append(abs(chi - asym) / chi)
    assert gaps == sorted(gaps, reverse=True)


def test_prior_art_examples():
    pa = prior_art_params(4)
    assert pa.alpha == pytest.approx(-2.3)
    assert pa.beta == pytest.approx(-15 / 114)
    assert prior_art_autocorrelation(4).at(1) == pytest.approx(3.9 * -15 / 114)
    assert prior_art_autocorrelation(4).at(1) == pytest.approx(-0.513158, abs=1e-6)
    pa = prior_art_params(256)
    assert pa.alpha == pytest.approx(-(3 * 256**2 - 2) / 1280, rel=1e-15)
    assert pa.alpha == pytest.approx(-153.598, abs=1e-3)
    assert pa.beta == pytest.approx(-2.2550e-7, rel=1e-4)
    assert pa.beta * (256 + pa.alpha) * (256 - 256) == 0


def test_prior_art_less_accurate_n64():
    exact = exact_autocorrelation(64)
    d_cubic = max(abs(a - b) for a, b in zip(corrected_cubic_autocorrelation(64).values, exact.values))
    d_prior = max(abs(a - b) for a, b in zip(prior_art_autocorrelation(64).values, exact.values))
    assert d_cubic < d_prior


@pytest.mark.expensive
def test_accuracy_ordering_n256():
    exact = exact_autocorrelation(256, expensive=True)
    d_cubic = max(abs(a - b) for a, b in zip(corrected_cubic_autocorrelation(256).values, exact.values))
    d_prior = max(abs(a - b) for a, b in zip(prior_art_autocorrelation(256).values, exact.values))
    assert d_cubic < d_prior
    # locked from the exact oracle: 2.7167e-5
    assert d_cubic <= 2.717e-5


def test_approx_count():
    assert approx_count_dc2(32) == pytest.approx(4 * math.sqrt(3) * 2**32 / (math.pi * 32**2), rel=1e-15)
    assert approx_count_dc2(32) == pytest.approx(9.2496e6, rel=1e-4)
    assert approx_count_dc2(32, refined=True) == pytest.approx(8.8996e6, rel=1e-4)
    with pytest.raises(DomainError):
        approx_count_dc2(30)
    with pytest.raises(OverflowError):
        approx_count_dc2(1100)


@pytest.mark.parametrize(
    "n, unrefined, refined", [(32, 0.03830231841793452, -0.000990934944694155), (64, 0.018953039106214264, -0.0003274629306235788)]
)
def test_approx_count_relative_errors(n, unrefined, refined):
    exact = count_dc2(n)
    e0 = approx_count_dc2(n) / exact - 1
    e1 = approx_count_dc2(n, refined=True) / exact - 1
    assert abs(e1) < abs(e0)
    assert e0 == pytest.approx(unrefined, rel=1e-9)
    assert e1 == pytest.approx(refined, rel=1e-9)
