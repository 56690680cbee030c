"""Unit tests for the model_selection.plot_data file"""

import pytest

import power_maxwell.model_selection.plot_data as sut
from power_maxwell.distribution import core

# region ecdf_frame(d, model_cdf) / qq_frame(d, model_quantile)


def test_ecdf_frame_given_sample_then_sorts_and_steps_to_one(samples):
    """Given a sample, then x is sorted, the empirical column climbs to 1 and fitted is the model cdf"""

    # Act
    result = sut.ecdf_frame(samples.tiny, lambda x: core.cdf(samples.maxwell, x))
    # Assert
    assert list(result.columns) == ["x", "empirical", "fitted"]
    assert list(result["x"]) == sorted(samples.tiny.values)
    assert list(result["empirical"]) == pytest.approx([0.2, 0.4, 0.6, 0.8, 1.0])
    assert result["fitted"].iloc[0] == pytest.approx(core.cdf(samples.maxwell, 0.4))


def test_qq_frame_given_sample_then_uses_midpoint_plotting_positions(samples):
    """Given a sample, then probabilities are (i - 0.5) / n and theoretical quantiles follow them"""

    # Act
    result = sut.qq_frame(samples.tiny, lambda u: core.quantile(samples.maxwell, u))
    # Assert
    assert list(result.columns) == ["probability", "theoretical", "empirical"]
    assert list(result["probability"]) == pytest.approx([0.1, 0.3, 0.5, 0.7, 0.9])
    assert result["theoretical"].is_monotonic_increasing
    assert result["theoretical"].iloc[2] == pytest.approx(core.quantile(samples.maxwell, 0.5))

# endregion
