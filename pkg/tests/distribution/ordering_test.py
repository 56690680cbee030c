"""Unit tests for the distribution.ordering file"""

import pytest

import power_maxwell.distribution.ordering as sut
from power_maxwell.core.exceptions import ParameterDomainError
from power_maxwell.distribution.constants import Trend
from power_maxwell.distribution.params import Params

GRID = [0.2, 0.5, 0.9, 1.3, 1.8, 2.5, 3.5]

# region trend(values)


@pytest.mark.parametrize("values, expected", [([1.0, 2.0, 3.0], Trend.INCREASING),
                                              ([3.0, 2.0, 2.0], Trend.DECREASING),
                                              ([1.0, 1.0, 1.0], Trend.CONSTANT),
                                              ([1.0, 3.0, 2.0], Trend.NON_MONOTONE)])
def test_trend_given_sequence_then_classifies_monotonicity(values, expected):
    """Given a sequence, then returns its monotonicity"""

    assert sut.trend(values) == expected

# endregion

# region compare(first, second, grid)


def test_compare_given_common_beta_and_smaller_alpha_then_first_dominates_in_every_order():
    """Given alpha1 < alpha2 and a common beta, then f1 / f2 increases, F1 <= F2, h1 <= h2 and m1 >= m2"""

    # Arrange
    first, second = Params(0.5, 0.75), Params(1.5, 0.75)
    # Act
    result = sut.compare(first, second, GRID)
    # Assert
    assert result == sut.OrderingReport(Trend.INCREASING, True, True, True)


def test_compare_given_swapped_pairs_then_orders_fail():
    """Given alpha1 > alpha2, then the ratio decreases and the first law is dominated nowhere"""

    # Arrange
    first, second = Params(1.5, 0.75), Params(0.5, 0.75)
    # Act
    result = sut.compare(first, second, GRID)
    # Assert
    assert result.likelihood_ratio is Trend.DECREASING
    assert not result.cdf_dominated
    assert not result.mean_residual_dominates


def test_hazard_trend_given_maxwell_then_increasing(samples):
    """Given the Maxwell member, then the hazard increases"""

    assert sut.hazard_trend(samples.maxwell, GRID) is Trend.INCREASING


@pytest.mark.parametrize("grid", [[1.0], [0.0, 1.0], [-1.0, 2.0]])
def test_compare_given_invalid_grid_then_raises(samples, grid):
    """Given fewer than two points or non positive points, then raises ParameterDomainError"""

    with pytest.raises(ParameterDomainError):
        sut.compare(samples.maxwell, samples.sweep, grid)

# endregion
