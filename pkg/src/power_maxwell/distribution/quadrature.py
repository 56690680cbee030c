"""Adaptive quadrature over the support.

Integrals are split at the median and at the 1 - 1e-12 quantile, and the last
piece runs to infinity, so super-polynomially decaying integrands lose nothing
in the tail and peaks far from the bulk (high moments, small shapes) stay
inside a finite piece.
"""

import logging
import math
import warnings
from typing import Callable, Iterable

from scipy import integrate as scipy_integrate

from power_maxwell.core.app import App
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.constants import UPPER_PROBABILITY
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.params import Params

app: App = App()
literals = LiteralsCore([DistributionLiterals])

SUBDIVISION_LIMIT = 500


def integrate(integrand: Callable[[float], float], p: Params, name: str, lower: float = 0.0,
              upper: float = math.inf, points: Iterable[float] = ()) -> float:
    """Integrates integrand over [lower, upper] with QUADPACK.

    Args:
        integrand: Function of x.
        p: Parameters, used to place the split points.
        name: Label used in log messages.
        lower: Lower limit, nonnegative.
        upper: Upper limit, may be +inf.
        points: Extra split points such as kinks of the integrand.

    Returns:
        The integral.
    """

    tolerance = app.settings.quadrature_tolerance
    median = core.quantile(p, 0.5)
    high = core.quantile(p, UPPER_PROBABILITY)
    cuts = sorted({c for c in (median, high, *points) if lower < c < upper})
    edges = [lower, *cuts, upper]
    logging.debug(literals.get("dist_quadrature_tail", name=name, lower=median, upper=high))

    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", scipy_integrate.IntegrationWarning)
            value, error = scipy_integrate.quad(integrand, a, b, epsabs=tolerance, epsrel=tolerance,
                                                limit=SUBDIVISION_LIMIT)
        if caught and error > 1e3 * max(tolerance, tolerance * abs(value)):
            logging.warning(literals.get("dist_quadrature_failed", name=name, error=error))
        total += value
    return total
