"""Unit tests for the distribution.entropy file"""

import math

import pytest
from scipy import stats

import power_maxwell.distribution.entropy as sut
from power_maxwell.core.exceptions import DivergenceError, ParameterDomainError
from power_maxwell.distribution.constants import EntropyKind
from power_maxwell.distribution.moments import coefficient_of_variation

# region EntropyOrder


@pytest.mark.parametrize("order, kind", [(1.0, EntropyKind.RENYI), (0.0, EntropyKind.RENYI),
                                         (-2.0, EntropyKind.DELTA), (math.nan, EntropyKind.DELTA),
                                         (0.0, EntropyKind.GENERALIZED), (1.0, EntropyKind.GENERALIZED)])
def test_entropy_order_given_invalid_order_then_raises(order, kind):
    """Given an order outside the family domain, then raises ParameterDomainError"""

    with pytest.raises(ParameterDomainError):
        sut.EntropyOrder(order, kind)


def test_entropy_order_given_negative_generalized_order_then_is_valid():
    """Given a negative order for the generalized family, then it is accepted"""

    assert sut.EntropyOrder(-1.0, EntropyKind.GENERALIZED).order == -1.0

# endregion

# region renyi_entropy / delta_entropy


@pytest.mark.parametrize("order", [0.5, 2.0, 3.0])
def test_renyi_and_delta_entropy_given_order_then_quadrature_matches_closed_form(samples, order):
    """Given several pairs and orders, then quadrature and gamma closed forms agree"""

    for p in samples.grid:
        assert sut.renyi_entropy(p, order) == pytest.approx(sut.renyi_entropy_closed_form(p, order), rel=1e-8)
        assert sut.delta_entropy(p, order) == pytest.approx(sut.delta_entropy_closed_form(p, order), rel=1e-8)


def test_renyi_entropy_given_order_close_to_one_then_approaches_differential_entropy(samples):
    """Given an order close to 1, then the Renyi entropy approaches the differential entropy"""

    # Arrange
    p = samples.sweep
    # Act / Assert
    assert sut.renyi_entropy_closed_form(p, 1.0001) == pytest.approx(sut.differential_entropy(p), abs=1e-3)


def test_renyi_entropy_given_order_above_one_then_is_lower(samples):
    """Given orders 0.5 < 2, then the Renyi entropy is nonincreasing in the order"""

    p = samples.maxwell
    assert sut.renyi_entropy(p, 0.5) > sut.differential_entropy(p) > sut.renyi_entropy(p, 2.0)


def test_power_integral_given_divergent_order_then_raises_divergence_error(samples):
    """Given beta < 1/3 and order (3 beta - 1) <= -1, then raises DivergenceError"""

    with pytest.raises(DivergenceError):
        sut.renyi_entropy(samples.small_beta, 4.0)


def test_power_integral_given_small_beta_and_moderate_order_then_converges(samples):
    """Given beta < 1/3 and order (3 beta - 1) > -1, then the integral exists"""

    # Arrange
    p = samples.small_beta
    # Act / Assert
    assert sut.power_integral(p, 2.0) == pytest.approx(math.exp(sut.log_power_integral_closed_form(p, 2.0)),
                                                       rel=1e-6)

# endregion

# region differential_entropy(p)


def test_differential_entropy_given_half_half_then_matches_gamma_entropy(samples):
    """Given X ~ Gamma(3/2, scale 2), then the entropy matches scipy"""

    assert sut.differential_entropy(samples.heavy) == pytest.approx(stats.gamma(1.5, scale=2.0).entropy(),
                                                                    rel=1e-8)


def test_differential_entropy_given_maxwell_then_matches_scipy_maxwell(samples):
    """Given the Maxwell member with alpha = 1, then the entropy matches scipy with scale 1/sqrt(2)"""

    assert sut.differential_entropy(samples.maxwell) == pytest.approx(
        stats.maxwell(scale=1.0 / math.sqrt(2.0)).entropy(), rel=1e-8)

# endregion

# region generalized_entropy / entropy


def test_generalized_entropy_given_order_two_then_returns_half_squared_cv(samples):
    """Given order 2, then the generalized entropy is cv^2 / 2"""

    # Arrange
    p = samples.sweep
    # Act / Assert
    assert sut.generalized_entropy(p, 2.0) == pytest.approx(coefficient_of_variation(p) ** 2 / 2.0, rel=1e-10)


def test_generalized_entropy_given_missing_moment_then_raises(samples):
    """Given order -1 and beta < 1/3, then E[X^-1] does not exist and raises ParameterDomainError"""

    with pytest.raises(ParameterDomainError):
        sut.generalized_entropy(samples.small_beta, -1.0)


@pytest.mark.parametrize("kind, function", [(EntropyKind.RENYI, "renyi_entropy"),
                                            (EntropyKind.DELTA, "delta_entropy"),
                                            (EntropyKind.GENERALIZED, "generalized_entropy")])
def test_entropy_given_kind_then_dispatches_to_family(samples, kind, function):
    """Given an EntropyOrder, then entropy() returns the value of its family"""

    # Arrange
    p = samples.maxwell
    # Act
    result = sut.entropy(p, sut.EntropyOrder(2.0, kind))
    # Assert
    assert result == getattr(sut, function)(p, 2.0)

# endregion
