"""Density, distribution, survival, hazard family and quantile.

Every function maps the argument to the gamma variable u = alpha * x^(2 beta),
for which u ~ Gamma(3/2); densities are computed in log space first.
"""

import math
from typing import Iterable

import numpy as np

from power_maxwell.core.exceptions import DegenerateDistributionError, ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.constants import GAMMA_SHAPE, LOG_FOUR_OVER_SQRT_PI, MAX_LOG
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.params import Params
from power_maxwell.special.gamma import inverse_reg_lower_gamma, reg_lower_gamma, reg_upper_gamma

literals = LiteralsCore([DistributionLiterals])


def _check_nonnegative(x: float):
    if not x >= 0.0:
        raise ParameterDomainError(literals.get("dist_x_negative", x=x))


def gamma_argument(p: Params, x: float) -> float:
    """alpha * x^(2 beta), +inf when it overflows."""

    _check_nonnegative(x)
    if x == 0.0:
        return 0.0
    log_u = math.log(p.alpha) + 2.0 * p.beta * math.log(x)
    if log_u > MAX_LOG:
        return math.inf
    return math.exp(log_u)


def log_pdf(p: Params, x: float) -> float:
    """Natural log of the density.

    Raises:
        ParameterDomainError: x < 0.
        DegenerateDistributionError: x = 0 and 3*beta - 1 < 0 (infinite density).
    """

    _check_nonnegative(x)
    exponent = 3.0 * p.beta - 1.0
    front = LOG_FOUR_OVER_SQRT_PI + 1.5 * math.log(p.alpha) + math.log(p.beta)
    if x == 0.0:
        if exponent > 0.0:
            return -math.inf
        if exponent == 0.0:
            return front
        raise DegenerateDistributionError(literals.get("dist_infinite_density_at_zero", beta=p.beta))
    return front + exponent * math.log(x) - gamma_argument(p, x)


def pdf(p: Params, x: float) -> float:
    """Density (4/sqrt(pi)) alpha^(3/2) beta x^(3 beta - 1) exp(-alpha x^(2 beta))."""

    return math.exp(min(log_pdf(p, x), MAX_LOG))


def cdf(p: Params, x: float) -> float:
    """P(3/2, alpha x^(2 beta))"""

    return reg_lower_gamma(GAMMA_SHAPE, gamma_argument(p, x))


def survival(p: Params, x: float) -> float:
    """Q(3/2, alpha x^(2 beta)), evaluated directly in the upper tail."""

    return reg_upper_gamma(GAMMA_SHAPE, gamma_argument(p, x))


def hazard(p: Params, x: float) -> float:
    """Instantaneous failure rate f(x) / S(x), x > 0.

    Raises:
        DegenerateDistributionError: survival underflows to zero.
    """

    if not x > 0.0:
        raise ParameterDomainError(literals.get("dist_x_not_positive", x=x))
    s = survival(p, x)
    if s <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_survival_underflow", x=x))
    return math.exp(log_pdf(p, x) - math.log(s))


def reverse_hazard(p: Params, x: float) -> float:
    """f(x) / F(x), x > 0."""

    if not x > 0.0:
        raise ParameterDomainError(literals.get("dist_x_not_positive", x=x))
    f = cdf(p, x)
    if f <= 0.0:
        raise ParameterDomainError(literals.get("dist_cdf_zero", x=x))
    return math.exp(log_pdf(p, x) - math.log(f))


def odds(p: Params, x: float) -> float:
    """F(x) / S(x)"""

    s = survival(p, x)
    if s <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_survival_underflow", x=x))
    return cdf(p, x) / s


def cumulative_hazard(p: Params, x: float) -> float:
    """-ln S(x)"""

    s = survival(p, x)
    if s <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_survival_underflow", x=x))
    return -math.log(s)


def quantile(p: Params, prob: float) -> float:
    """Inverse distribution function.

    x = (z / alpha)^(1 / (2 beta)) with z the inverse of P(3/2, .) at prob.

    Raises:
        ParameterDomainError: prob outside [0, 1); prob = 1 maps to +inf and is rejected.
    """

    if not 0.0 <= prob < 1.0:
        raise ParameterDomainError(literals.get("dist_probability_out_of_range", prob=prob))
    if prob == 0.0:
        return 0.0
    z = inverse_reg_lower_gamma(GAMMA_SHAPE, prob, tolerance=1e-12)
    if z == 0.0:
        return 0.0
    return math.exp((math.log(z) - math.log(p.alpha)) / (2.0 * p.beta))


def cdf_array(p: Params, xs: Iterable[float]) -> np.ndarray:
    """cdf evaluated element-wise."""

    values = np.asarray(xs, dtype=float)
    return np.fromiter((cdf(p, float(x)) for x in values.ravel()), dtype=float,
                       count=values.size).reshape(values.shape)


def log_pdf_array(p: Params, xs: Iterable[float]) -> np.ndarray:
    """log_pdf for positive data, vectorized with numpy."""

    values = np.asarray(xs, dtype=float)
    if np.any(values <= 0.0):
        raise ParameterDomainError(literals.get("dist_x_not_positive", x=float(values.min())))
    log_values = np.log(values)
    return (LOG_FOUR_OVER_SQRT_PI + 1.5 * math.log(p.alpha) + math.log(p.beta)
            + (3.0 * p.beta - 1.0) * log_values - p.alpha * np.exp(2.0 * p.beta * log_values))
