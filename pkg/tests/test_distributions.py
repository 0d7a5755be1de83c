"""Distribution family tests: sampling moments, densities, inverses."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from elfuse.distributions import (
    DistributionSpec,
    cdf,
    label,
    median,
    parse_label,
    pdf,
    quantile,
    sample,
    standard_normal,
)


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def test_normal_scale_param_is_a_variance():
    spec = DistributionSpec("normal", 0.0, 4.0)
    draws = sample(spec, 10**6, rng(0))
    assert abs(draws.var() - 4.0) < 0.04


def test_normal_location_shift():
    spec = DistributionSpec("normal", 3.0, 1.0)
    draws = sample(spec, 10**5, rng(1))
    assert abs(draws.mean() - 3.0) < 0.02


def test_laplace_variance_matches_quadrature():
    b = 0.5
    spec = DistributionSpec("double_exponential", 0.0, b)
    draws = sample(spec, 10**6, rng(2))
    # E[Y^2] for the Laplace density, by direct numeric integration
    second, _ = integrate.quad(lambda y: y * y / (2 * b) * np.exp(-abs(y) / b), -30, 30)
    assert abs(second - 2 * b * b) < 1e-10
    assert abs(draws.var() - second) / second < 0.02


def test_student_t3_quantile_against_root_of_cdf_integral():
    spec = DistributionSpec("t", 0.0, 3)
    # independent oracle: invert the numerically integrated density
    from scipy.optimize import brentq

    def density(y: float) -> float:
        return 2.0 / (np.pi * np.sqrt(3.0) * (1.0 + y * y / 3.0) ** 2)

    def cdf_quad(q: float) -> float:
        val, _ = integrate.quad(density, -np.inf, q, limit=200)
        return val

    q975 = brentq(lambda q: cdf_quad(q) - 0.975, 0.1, 20.0, xtol=1e-10)
    assert abs(q975 - 3.1824) < 5e-4
    assert abs(float(quantile(spec, 0.975)) - q975) < 1e-7


@pytest.mark.parametrize(
    "spec",
    [
        DistributionSpec("normal", 0.0, 1.5),
        DistributionSpec("t", 0.0, 3),
        DistributionSpec("double_exponential", 1.0, 0.7),
    ],
)
def test_pdf_integrates_to_one(spec):
    total, _ = integrate.quad(lambda y: float(pdf(spec, y)), -np.inf, np.inf, limit=200)
    assert abs(total - 1.0) < 1e-8


@pytest.mark.parametrize(
    "spec",
    [
        DistributionSpec("normal", -1.0, 2.0),
        DistributionSpec("t", 0.0, 5),
        DistributionSpec("double_exponential", 0.0, 1.5),
    ],
)
def test_quantile_inverts_cdf(spec):
    for p in (0.01, 0.2, 0.5, 0.8, 0.99):
        assert abs(float(cdf(spec, quantile(spec, p))) - p) < 1e-10


def test_median_is_location():
    assert median(DistributionSpec("double_exponential", 2.5, 1.0)) == 2.5
    assert median(standard_normal()) == 0.0


def test_cdf_at_median_is_half():
    for spec in (
        DistributionSpec("normal", 0.0, 3.0),
        DistributionSpec("t", 0.0, 3),
        DistributionSpec("double_exponential", -1.0, 0.5),
    ):
        assert abs(float(cdf(spec, median(spec))) - 0.5) < 1e-12


def test_identical_seeds_give_identical_draws():
    spec = DistributionSpec("t", 0.0, 3)
    a = sample(spec, 1000, rng(7))
    b = sample(spec, 1000, rng(7))
    assert np.array_equal(a, b)


def test_prefix_nesting_of_draws():
    # a size-m draw is the prefix of a size-n draw from the same state
    for spec in (
        standard_normal(),
        DistributionSpec("t", 0.0, 5),
        DistributionSpec("double_exponential", 0.0, 1.0),
    ):
        short = sample(spec, 10, rng(11))
        long = sample(spec, 30, rng(11))
        assert np.array_equal(short, long[:10])


def test_label_round_trip():
    for spec in (
        DistributionSpec("normal", 0.0, 1.25),
        DistributionSpec("t", 0.0, 3),
        DistributionSpec("double_exponential", 0.0, 0.5),
    ):
        assert parse_label(label(spec)) == spec


def test_label_formats():
    assert label(DistributionSpec("normal", 0.0, 1.25)) == "N(0,1.25)"
    assert label(DistributionSpec("t", 0.0, 3)) == "t3"
    assert label(DistributionSpec("double_exponential", 0.0, 0.5)) == "DE(0,0.5)"


def test_rejects_bad_specs():
    with pytest.raises(ValueError):
        DistributionSpec("normal", 0.0, 0.0)
    with pytest.raises(ValueError):
        DistributionSpec("t", 0.0, 2.5)
    with pytest.raises(ValueError):
        DistributionSpec("t", 1.0, 3)
    with pytest.raises(ValueError):
        DistributionSpec("uniform", 0.0, 1.0)
    with pytest.raises(ValueError):
        parse_label("Cauchy(0,1)")


def test_quantile_rejects_boundary_levels():
    with pytest.raises(ValueError):
        quantile(standard_normal(), 0.0)
    with pytest.raises(ValueError):
        quantile(standard_normal(), 1.0)


@given(
    p=st.floats(min_value=0.001, max_value=0.999),
    var=st.floats(min_value=0.1, max_value=9.0),
)
@settings(max_examples=50, deadline=None)
def test_normal_quantile_symmetry(p, var):
    spec = DistributionSpec("normal", 0.0, var)
    lo = float(quantile(spec, p))
    hi = float(quantile(spec, 1.0 - p))
    assert abs(lo + hi) < 1e-9
