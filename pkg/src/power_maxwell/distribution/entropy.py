"""Renyi, delta and generalized entropies.

The integral of f^delta is a gamma integral:

    C^delta / (2 beta) * (delta alpha)^(-s) * Gamma(s),
    C = (4 / sqrt(pi)) alpha^(3/2) beta,  s = (delta (3 beta - 1) + 1) / (2 beta)

finite exactly when delta (3 beta - 1) > -1. Quadrature is the computing path,
the closed form the cross-check.
"""

import math
from dataclasses import dataclass

from power_maxwell.core.exceptions import DivergenceError, ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.constants import EntropyKind, LOG_FOUR_OVER_SQRT_PI
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.moments import mtsf, real_moment
from power_maxwell.distribution.params import Params
from power_maxwell.distribution.quadrature import integrate
from power_maxwell.special.gamma import log_gamma

literals = LiteralsCore([DistributionLiterals])


@dataclass(frozen=True)
class EntropyOrder:
    """Order index of an entropy family.

    Renyi and delta entropies need order > 0 and order != 1; the generalized
    entropy needs order outside {0, 1}.
    """

    order: float
    kind: EntropyKind

    def __post_init__(self):
        if self.kind is EntropyKind.GENERALIZED:
            valid = self.order not in (0.0, 1.0)
        else:
            valid = self.order > 0.0 and self.order != 1.0
        if not valid or math.isnan(self.order) or math.isinf(self.order):
            raise ParameterDomainError(literals.get("dist_entropy_order", order=self.order, kind=self.kind.value))


def _check_power_integral(p: Params, order: float):
    if order * (3.0 * p.beta - 1.0) <= -1.0:
        raise DivergenceError(literals.get("dist_entropy_divergent", order=order, beta=p.beta))


def power_integral(p: Params, order: float) -> float:
    """Integral of f(x)^order over the support, by quadrature.

    Raises:
        DivergenceError: order * (3 beta - 1) <= -1.
    """

    _check_power_integral(p, order)
    return integrate(lambda x: math.exp(order * core.log_pdf(p, x)), p, "power of density")


def log_power_integral_closed_form(p: Params, order: float) -> float:
    """Log of the gamma-integral closed form of the integral of f^order."""

    _check_power_integral(p, order)
    s = (order * (3.0 * p.beta - 1.0) + 1.0) / (2.0 * p.beta)
    log_c = LOG_FOUR_OVER_SQRT_PI + 1.5 * math.log(p.alpha) + math.log(p.beta)
    return order * log_c - math.log(2.0 * p.beta) - s * math.log(order * p.alpha) + log_gamma(s)


def renyi_entropy(p: Params, order: float) -> float:
    """ln(integral of f^order) / (1 - order)"""

    EntropyOrder(order, EntropyKind.RENYI)
    return math.log(power_integral(p, order)) / (1.0 - order)


def renyi_entropy_closed_form(p: Params, order: float) -> float:
    EntropyOrder(order, EntropyKind.RENYI)
    return log_power_integral_closed_form(p, order) / (1.0 - order)


def delta_entropy(p: Params, order: float) -> float:
    """(1 - integral of f^order) / (order - 1)"""

    EntropyOrder(order, EntropyKind.DELTA)
    return (1.0 - power_integral(p, order)) / (order - 1.0)


def delta_entropy_closed_form(p: Params, order: float) -> float:
    EntropyOrder(order, EntropyKind.DELTA)
    return (1.0 - math.exp(log_power_integral_closed_form(p, order))) / (order - 1.0)


def generalized_entropy(p: Params, order: float) -> float:
    """(E[X^order] mu^(-order) - 1) / (order (order - 1))

    Raises:
        ParameterDomainError: order in {0, 1} or 3 beta + order <= 0.
    """

    EntropyOrder(order, EntropyKind.GENERALIZED)
    ratio = math.exp(math.log(real_moment(p, order)) - order * math.log(mtsf(p)))
    return (ratio - 1.0) / (order * (order - 1.0))


def differential_entropy(p: Params) -> float:
    """-integral of f ln f, the order -> 1 limit of the Renyi and delta entropies."""

    def integrand(x: float) -> float:
        log_f = core.log_pdf(p, x)
        if log_f == -math.inf:
            return 0.0
        return -math.exp(log_f) * log_f

    return integrate(integrand, p, "differential entropy")


def entropy(p: Params, order: EntropyOrder) -> float:
    """Dispatches on the entropy family of order."""

    if order.kind is EntropyKind.RENYI:
        return renyi_entropy(p, order.order)
    if order.kind is EntropyKind.DELTA:
        return delta_entropy(p, order.order)
    return generalized_entropy(p, order.order)
