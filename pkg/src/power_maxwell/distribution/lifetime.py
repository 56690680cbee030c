"""Residual life X - t | X > t and reversed residual life t - X | X <= t."""

import math
from dataclasses import dataclass

from power_maxwell.core.exceptions import DegenerateDistributionError, ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.constants import GAMMA_SHAPE, SQRT_PI
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.moments import conditional_moment
from power_maxwell.distribution.params import Params
from power_maxwell.special.gamma import gamma_function, reg_lower_gamma

literals = LiteralsCore([DistributionLiterals])


@dataclass(frozen=True)
class ResidualSpec:
    """Parameters plus the elapsed age t > 0."""

    params: Params
    t: float

    def __post_init__(self):
        if not self.t > 0.0 or math.isinf(self.t):
            raise ParameterDomainError(literals.get("dist_residual_age", t=self.t))


def _survival_at_age(rs: ResidualSpec) -> float:
    s = core.survival(rs.params, rs.t)
    if s <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_residual_survival_zero", t=rs.t))
    return s


def _cdf_at_age(rs: ResidualSpec) -> float:
    f = core.cdf(rs.params, rs.t)
    if f <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_cdf_zero", x=rs.t))
    return f


def _check_residual_argument(x: float):
    if not x >= 0.0:
        raise ParameterDomainError(literals.get("dist_x_negative", x=x))


def _check_reversed_argument(rs: ResidualSpec, x: float):
    if not 0.0 <= x < rs.t:
        raise ParameterDomainError(literals.get("dist_reversed_residual_domain", x=x, t=rs.t))


# region residual life

def residual_survival(rs: ResidualSpec, x: float) -> float:
    """S(t + x) / S(t)"""

    _check_residual_argument(x)
    return core.survival(rs.params, rs.t + x) / _survival_at_age(rs)


def residual_pdf(rs: ResidualSpec, x: float) -> float:
    """f(t + x) / S(t)"""

    _check_residual_argument(x)
    return core.pdf(rs.params, rs.t + x) / _survival_at_age(rs)


def residual_pdf_closed_form(rs: ResidualSpec, x: float) -> float:
    """4 alpha^(3/2) beta (x+t)^(3 beta - 1) exp(-alpha (x+t)^(2 beta)) / (sqrt(pi) - 2 gamma(3/2, alpha t^(2 beta)))

    The lower incomplete gamma in the denominator is taken at the age t.
    """

    _check_residual_argument(x)
    p = rs.params
    y = rs.t + x
    lower = gamma_function(GAMMA_SHAPE) * reg_lower_gamma(GAMMA_SHAPE, core.gamma_argument(p, rs.t))
    numerator = 4.0 * p.alpha ** 1.5 * p.beta * y ** (3.0 * p.beta - 1.0) * math.exp(-core.gamma_argument(p, y))
    return numerator / (SQRT_PI - 2.0 * lower)


def residual_hazard(rs: ResidualSpec, x: float) -> float:
    """Hazard of the residual life, equal to the hazard at t + x."""

    _check_residual_argument(x)
    _survival_at_age(rs)
    return core.hazard(rs.params, rs.t + x)


def mean_residual_life(rs: ResidualSpec) -> float:
    """E[X - t | X > t]"""

    _survival_at_age(rs)
    return conditional_moment(rs.params, 1, rs.t) - rs.t

# endregion

# region reversed residual life

def reversed_residual_survival(rs: ResidualSpec, x: float) -> float:
    """F(t - x) / F(t) for 0 <= x < t."""

    _check_reversed_argument(rs, x)
    return core.cdf(rs.params, rs.t - x) / _cdf_at_age(rs)


def reversed_residual_pdf(rs: ResidualSpec, x: float) -> float:
    """f(t - x) / F(t) for 0 <= x < t."""

    _check_reversed_argument(rs, x)
    return core.pdf(rs.params, rs.t - x) / _cdf_at_age(rs)


def reversed_residual_hazard(rs: ResidualSpec, x: float) -> float:
    """f(t - x) / F(t - x), the reverse hazard at t - x."""

    _check_reversed_argument(rs, x)
    _cdf_at_age(rs)
    return core.reverse_hazard(rs.params, rs.t - x)


def reversed_residual_pdf_closed_form(rs: ResidualSpec, x: float) -> float:
    """2 alpha^(3/2) beta (t-x)^(3 beta - 1) exp(-alpha (t-x)^(2 beta)) / gamma(3/2, alpha t^(2 beta))"""

    _check_reversed_argument(rs, x)
    p = rs.params
    y = rs.t - x
    lower = gamma_function(GAMMA_SHAPE) * reg_lower_gamma(GAMMA_SHAPE, core.gamma_argument(p, rs.t))
    if lower <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_cdf_zero", x=rs.t))
    return 2.0 * p.alpha ** 1.5 * p.beta * y ** (3.0 * p.beta - 1.0) * math.exp(-core.gamma_argument(p, y)) / lower


def reversed_residual_hazard_closed_form(rs: ResidualSpec, x: float) -> float:
    """Same numerator with the lower incomplete gamma taken at t - x."""

    _check_reversed_argument(rs, x)
    p = rs.params
    y = rs.t - x
    lower = gamma_function(GAMMA_SHAPE) * reg_lower_gamma(GAMMA_SHAPE, core.gamma_argument(p, y))
    if lower <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_cdf_zero", x=y))
    return 2.0 * p.alpha ** 1.5 * p.beta * y ** (3.0 * p.beta - 1.0) * math.exp(-core.gamma_argument(p, y)) / lower

# endregion
