"""Baseline Maxwell law, the unit-power member of the family."""

import math

import numpy as np

from power_maxwell.core.exceptions import ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.constants import GAMMA_SHAPE, LOG_FOUR_OVER_SQRT_PI
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.special.gamma import reg_lower_gamma

literals = LiteralsCore([DistributionLiterals])


def _check(alpha: float, z: float):
    if not alpha > 0.0:
        raise ParameterDomainError(literals.get("dist_params_not_positive", alpha=alpha, beta=1.0))
    if not z >= 0.0:
        raise ParameterDomainError(literals.get("dist_x_negative", x=z))


def maxwell_pdf(alpha: float, z: float) -> float:
    """(4/sqrt(pi)) alpha^(3/2) z^2 exp(-alpha z^2)"""

    _check(alpha, z)
    return 4.0 / math.sqrt(math.pi) * alpha ** 1.5 * z * z * math.exp(-alpha * z * z)


def maxwell_cdf(alpha: float, z: float) -> float:
    _check(alpha, z)
    return reg_lower_gamma(GAMMA_SHAPE, alpha * z * z)


def maxwell_log_likelihood(alpha: float, data: np.ndarray) -> float:
    """Sum of log densities of positive data."""

    values = np.asarray(data, dtype=float)
    _check(alpha, float(values.min()))
    n = values.size
    return float(n * LOG_FOUR_OVER_SQRT_PI + 1.5 * n * math.log(alpha) + 2.0 * np.log(values).sum()
                 - alpha * np.square(values).sum())
