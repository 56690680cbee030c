"""Unit tests for the distribution.core file"""

import math

import numpy as np
import pytest
from scipy import integrate as scipy_integrate

import power_maxwell.distribution.core as sut
from power_maxwell.core.exceptions import DegenerateDistributionError, ParameterDomainError
from power_maxwell.distribution.maxwell import maxwell_cdf, maxwell_pdf
from power_maxwell.distribution.params import Params

# region Params


@pytest.mark.parametrize("alpha, beta", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0), (math.inf, 1.0), (1.0, math.nan)])
def test_params_given_non_positive_values_then_raises_parameter_domain_error(alpha, beta):
    """Given a non positive, infinite or nan parameter, then raises ParameterDomainError"""

    # Act / Assert
    with pytest.raises(ParameterDomainError):
        Params(alpha, beta)


def test_params_rescaled_given_factor_then_scales_the_variable(samples, oracles):
    """Given X with params p and c > 0, then c*X has the rescaled params: F_cX(c x) = F_X(x)"""

    # Arrange
    p = samples.sweep
    c = 2.5
    # Act
    q = p.rescaled(c)
    # Assert
    assert q.beta == p.beta
    assert sut.cdf(q, c * 1.3) == pytest.approx(sut.cdf(p, 1.3), rel=1e-12)

# endregion

# region pdf(p, x) / cdf(p, x) / survival(p, x)


@pytest.mark.parametrize("x", [0.05, 0.5, 1.0, 1.7, 4.0])
def test_pdf_cdf_given_unit_power_then_reduce_to_maxwell(samples, x):
    """Given beta = 1, then density and distribution function equal the Maxwell ones"""

    # Arrange
    p = samples.maxwell
    # Act / Assert
    assert sut.pdf(p, x) == pytest.approx(maxwell_pdf(p.alpha, x), rel=1e-12)
    assert sut.cdf(p, x) == pytest.approx(maxwell_cdf(p.alpha, x), rel=1e-12)


@pytest.mark.parametrize("x", [0.1, 0.8, 1.0, 2.0, 3.5])
def test_cdf_given_grid_then_matches_gamma_oracle(samples, oracles, x):
    """Given several parameter pairs, then F(x) equals P(3/2, alpha x^(2 beta))"""

    for p in samples.grid:
        # Act
        result = sut.cdf(p, x)
        # Assert
        assert result == pytest.approx(oracles.cdf(p.alpha, p.beta, x), rel=1e-11, abs=1e-15)


def test_pdf_given_params_then_integrates_to_one(samples):
    """Given several parameter pairs, then the density integrates to one"""

    for p in samples.grid:
        # Act
        total, _ = scipy_integrate.quad(lambda x: sut.pdf(p, x), 0.0, np.inf, limit=200)
        # Assert
        assert total == pytest.approx(1.0, abs=1e-7)


def test_cdf_given_x_then_derivative_is_the_pdf(samples):
    """Given x, then the central difference of F approximates f"""

    # Arrange
    p, x, h = samples.sweep, 1.2, 1e-5
    # Act
    slope = (sut.cdf(p, x + h) - sut.cdf(p, x - h)) / (2.0 * h)
    # Assert
    assert slope == pytest.approx(sut.pdf(p, x), rel=1e-6)


def test_survival_given_far_tail_then_stays_positive_and_complements_cdf(samples):
    """Given x far in the tail, then S keeps relative precision while F + S = 1 in the bulk"""

    # Arrange
    p = samples.maxwell
    # Act
    tail = sut.survival(p, 20.0)
    # Assert
    assert 0.0 < tail < 1e-170
    assert sut.cdf(p, 1.0) + sut.survival(p, 1.0) == pytest.approx(1.0, abs=1e-15)


def test_cdf_given_zero_and_negative_then_zero_and_raises(samples):
    """Given x = 0 then F = 0, given x < 0 then raises ParameterDomainError"""

    # Assert
    assert sut.cdf(samples.sweep, 0.0) == 0.0
    with pytest.raises(ParameterDomainError):
        sut.cdf(samples.sweep, -1.0)

# endregion

# region log_pdf(p, x) at zero


def test_log_pdf_given_zero_then_follows_the_sign_of_3beta_minus_1():
    """Given x = 0, then the density is 0 for beta > 1/3, finite for beta = 1/3 and raises below"""

    # Assert
    assert sut.pdf(Params(1.0, 1.0), 0.0) == 0.0
    assert sut.pdf(Params(1.0, 1.0 / 3.0), 0.0) == pytest.approx(4.0 / math.sqrt(math.pi) / 3.0, rel=1e-12)
    with pytest.raises(DegenerateDistributionError):
        sut.log_pdf(Params(1.0, 0.25), 0.0)


def test_log_pdf_array_given_values_then_matches_scalar(samples):
    """Given an array of positive values, then the vectorized log density matches the scalar one"""

    # Arrange
    p = samples.sweep
    xs = [0.2, 0.9, 1.5, 3.0]
    # Act
    result = sut.log_pdf_array(p, xs)
    # Assert
    assert result == pytest.approx([sut.log_pdf(p, x) for x in xs], rel=1e-13)


def test_log_pdf_array_given_zero_then_raises(samples):
    """Given a non positive value, then raises ParameterDomainError"""

    with pytest.raises(ParameterDomainError):
        sut.log_pdf_array(samples.sweep, [1.0, 0.0])

# endregion

# region hazard family


def test_hazard_given_x_then_equals_pdf_over_survival(samples):
    """Given x > 0, then h = f / S, reverse hazard = f / F, odds = F / S and H = -ln S"""

    # Arrange
    p, x = samples.sweep, 1.4
    f, big_f, s = sut.pdf(p, x), sut.cdf(p, x), sut.survival(p, x)
    # Assert
    assert sut.hazard(p, x) == pytest.approx(f / s, rel=1e-12)
    assert sut.reverse_hazard(p, x) == pytest.approx(f / big_f, rel=1e-12)
    assert sut.odds(p, x) == pytest.approx(big_f / s, rel=1e-12)
    assert sut.cumulative_hazard(p, x) == pytest.approx(-math.log(s), rel=1e-12)


def test_hazard_given_zero_then_raises_parameter_domain_error(samples):
    """Given x = 0, then raises ParameterDomainError"""

    with pytest.raises(ParameterDomainError):
        sut.hazard(samples.sweep, 0.0)


def test_hazard_given_survival_underflow_then_raises_degenerate_distribution_error(samples):
    """Given x so large that the survival underflows, then raises DegenerateDistributionError"""

    with pytest.raises(DegenerateDistributionError):
        sut.hazard(samples.narrow, 50.0)

# endregion

# region quantile(p, prob)


@pytest.mark.parametrize("prob", [1e-4, 0.1, 0.5, 0.9, 0.999999])
def test_quantile_given_probability_then_inverts_cdf(samples, oracles, prob):
    """Given a probability, then F(Q(prob)) = prob and Q matches the oracle"""

    for p in samples.grid:
        # Act
        x = sut.quantile(p, prob)
        # Assert
        assert sut.cdf(p, x) == pytest.approx(prob, abs=1e-11)
        assert x == pytest.approx(oracles.quantile(p.alpha, p.beta, prob), rel=1e-6)


def test_quantile_given_maxwell_median_then_returns_known_value(samples):
    """Given the Maxwell member with alpha = 1, then the median is 1.0877"""

    # Act / Assert
    assert sut.quantile(samples.maxwell, 0.5) == pytest.approx(1.0877, abs=1e-4)


@pytest.mark.parametrize("prob", [1.0, -0.2, 2.0])
def test_quantile_given_probability_out_of_range_then_raises(samples, prob):
    """Given prob outside [0, 1), then raises ParameterDomainError"""

    with pytest.raises(ParameterDomainError):
        sut.quantile(samples.sweep, prob)


def test_cdf_array_given_matrix_then_keeps_shape(samples):
    """Given a 2x2 array, then the element-wise cdf keeps the shape"""

    # Act
    result = sut.cdf_array(samples.sweep, [[0.5, 1.0], [1.5, 2.0]])
    # Assert
    assert result.shape == (2, 2)
    assert result[1, 0] == pytest.approx(sut.cdf(samples.sweep, 1.5))

# endregion
