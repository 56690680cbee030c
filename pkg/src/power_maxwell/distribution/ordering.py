"""Stochastic comparison of two parameter pairs on a grid of points.

For a common shape beta and alpha1 <= alpha2 the density ratio f1 / f2 is
nondecreasing, which implies F1 <= F2, h1 <= h2 and a larger mean residual
life for the first law.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from power_maxwell.core.exceptions import ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.constants import Trend
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.moments import conditional_moment_closed_form
from power_maxwell.distribution.params import Params

literals = LiteralsCore([DistributionLiterals])

TREND_TOLERANCE = 1e-12


@dataclass(frozen=True)
class OrderingReport:
    """Orders of the first law relative to the second, checked on a grid.

    Attributes:
        likelihood_ratio: Trend of f1 / f2 along the grid.
        cdf_dominated: F1 <= F2 at every grid point.
        hazard_dominated: h1 <= h2 at every grid point.
        mean_residual_dominates: m1 >= m2 at every grid point.
    """

    likelihood_ratio: Trend
    cdf_dominated: bool
    hazard_dominated: bool
    mean_residual_dominates: bool


def _as_grid(grid: Iterable[float]) -> np.ndarray:
    values = np.sort(np.asarray(list(grid), dtype=float))
    if values.size < 2 or np.any(values <= 0.0):
        raise ParameterDomainError(literals.get("dist_grid_too_short"))
    return values


def trend(values: Iterable[float], tolerance: float = TREND_TOLERANCE) -> Trend:
    """Monotonicity of a sequence, allowing steps of size tolerance * max(1, |max value|)."""

    sequence = np.asarray(list(values), dtype=float)
    steps = np.diff(sequence)
    slack = tolerance * max(1.0, float(np.max(np.abs(sequence))))
    if np.all(np.abs(steps) <= slack):
        return Trend.CONSTANT
    if np.all(steps >= -slack):
        return Trend.INCREASING
    if np.all(steps <= slack):
        return Trend.DECREASING
    return Trend.NON_MONOTONE


def likelihood_ratio_trend(first: Params, second: Params, grid: Iterable[float]) -> Trend:
    """Trend of ln f1 - ln f2 on the grid."""

    xs = _as_grid(grid)
    return trend(core.log_pdf_array(first, xs) - core.log_pdf_array(second, xs))


def hazard_trend(p: Params, grid: Iterable[float]) -> Trend:
    """Shape of the hazard rate on the grid."""

    return trend(core.hazard(p, float(x)) for x in _as_grid(grid))


def cdf_dominated(first: Params, second: Params, grid: Iterable[float]) -> bool:
    xs = _as_grid(grid)
    return all(core.cdf(first, float(x)) <= core.cdf(second, float(x)) + TREND_TOLERANCE for x in xs)


def hazard_dominated(first: Params, second: Params, grid: Iterable[float]) -> bool:
    xs = _as_grid(grid)
    return all(core.hazard(first, float(x)) <= core.hazard(second, float(x)) * (1.0 + TREND_TOLERANCE)
               for x in xs)


def mean_residual_dominates(first: Params, second: Params, grid: Iterable[float]) -> bool:
    xs = _as_grid(grid)
    return all(conditional_moment_closed_form(first, 1, float(x)) >=
               conditional_moment_closed_form(second, 1, float(x)) * (1.0 - TREND_TOLERANCE) for x in xs)


def compare(first: Params, second: Params, grid: Iterable[float]) -> OrderingReport:
    """Evaluates every order of first relative to second on the grid."""

    xs = _as_grid(grid)
    return OrderingReport(likelihood_ratio=likelihood_ratio_trend(first, second, xs),
                          cdf_dominated=cdf_dominated(first, second, xs),
                          hazard_dominated=hazard_dominated(first, second, xs),
                          mean_residual_dominates=mean_residual_dominates(first, second, xs))
