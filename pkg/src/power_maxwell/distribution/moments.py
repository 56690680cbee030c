"""Moments, shape measures, generating functions and inequality curves.

Closed forms come from u = alpha * x^(2 beta) ~ Gamma(3/2):

    E[X^r] = (2 / sqrt(pi)) * alpha^(-r / (2 beta)) * Gamma((3 beta + r) / (2 beta))

and the partial moment over [0, q] is E[X^r] * P((3 beta + r) / (2 beta), alpha q^(2 beta)).
Mean deviation, generating functions, conditional moments and the Lorenz and
Bonferroni curves are computed by quadrature; the closed forms are exposed
separately as cross-checks.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Iterable, List, Tuple

import pandas as pd

from power_maxwell.core.exceptions import DegenerateDistributionError, DivergenceError, ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.constants import TWO_OVER_SQRT_PI
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.params import Params
from power_maxwell.distribution.quadrature import integrate
from power_maxwell.special.gamma import log_gamma, reg_lower_gamma, reg_upper_gamma

literals = LiteralsCore([DistributionLiterals])

SERIES_TERMS = 30


@dataclass(frozen=True)
class ModeEstimate:
    """Location of the density maximum.

    Attributes:
        value: The mode, 0 when the density is nonincreasing.
        at_zero: True when beta <= 1/3 and the density has no interior maximum.
    """

    value: float
    at_zero: bool


@dataclass(frozen=True)
class ShapeSummary:
    """One row of the shape table. cv is a ratio, not a percentage."""

    mean: float
    variance: float
    skewness: float
    kurtosis: float
    mode: float
    cv: float

    def as_dict(self) -> dict:
        return asdict(self)


def _shape_index(p: Params, order: float) -> float:
    return (3.0 * p.beta + order) / (2.0 * p.beta)


def real_moment(p: Params, order: float) -> float:
    """E[X^order] for any real order with 3 beta + order > 0.

    Raises:
        ParameterDomainError: 3 beta + order <= 0, the moment does not exist.
    """

    if not 3.0 * p.beta + order > 0.0:
        raise ParameterDomainError(literals.get("dist_real_moment_order", order=order))
    if order == 0.0:
        return 1.0
    log_value = (math.log(TWO_OVER_SQRT_PI) - order / (2.0 * p.beta) * math.log(p.alpha)
                 + log_gamma(_shape_index(p, order)))
    return math.exp(log_value)


def raw_moment(p: Params, r: int) -> float:
    """E[X^r] for a positive integer r. All moments exist."""

    if isinstance(r, bool) or int(r) != r or r < 1:
        raise ParameterDomainError(literals.get("dist_moment_order", r=r))
    return real_moment(p, float(r))


def mtsf(p: Params) -> float:
    """Mean time to system failure, the mean of the distribution."""

    return raw_moment(p, 1)


def central_moments(p: Params) -> Tuple[float, float, float]:
    """(mu2, mu3, mu4), the central moments of order 2 to 4."""

    m1, m2, m3, m4 = (raw_moment(p, r) for r in range(1, 5))
    mu2 = m2 - m1 ** 2
    mu3 = m3 - 3.0 * m2 * m1 + 2.0 * m1 ** 3
    mu4 = m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 ** 2 - 3.0 * m1 ** 4
    return mu2, mu3, mu4


def standard_deviation(p: Params) -> float:
    return math.sqrt(central_moments(p)[0])


def skewness_kurtosis(p: Params) -> Tuple[float, float]:
    """Pearson (beta1, beta2) = (mu3^2 / mu2^3, mu4 / mu2^2). Both depend on beta only."""

    mu2, mu3, mu4 = central_moments(p)
    return mu3 ** 2 / mu2 ** 3, mu4 / mu2 ** 2


def coefficient_of_variation(p: Params) -> float:
    """Standard deviation over mean, as a ratio."""

    return standard_deviation(p) / mtsf(p)


def mode(p: Params) -> ModeEstimate:
    """((3 beta - 1) / (2 alpha beta))^(1 / (2 beta)) when beta > 1/3, else 0."""

    if 3.0 * p.beta - 1.0 <= 0.0:
        logging.debug(literals.get("dist_mode_at_zero", beta=p.beta))
        return ModeEstimate(0.0, True)
    value = ((3.0 * p.beta - 1.0) / (2.0 * p.alpha * p.beta)) ** (1.0 / (2.0 * p.beta))
    return ModeEstimate(value, False)


def median_empirical(p: Params) -> float:
    """Approximate median from the mode-mean relation M0 / 3 + 2 mu / 3.

    Only an approximation; the exact median is quantile(p, 0.5). When the mode
    sits at zero the relation falls back to 2 mu / 3.
    """

    return mode(p).value / 3.0 + 2.0 * mtsf(p) / 3.0


def shape_summary(p: Params) -> ShapeSummary:
    mu2, _, _ = central_moments(p)
    skewness, kurtosis = skewness_kurtosis(p)
    return ShapeSummary(mean=mtsf(p), variance=mu2, skewness=skewness, kurtosis=kurtosis,
                        mode=mode(p).value, cv=coefficient_of_variation(p))


def shape_table(rows: Iterable[Params]) -> pd.DataFrame:
    """ShapeSummary of every parameter pair, one table row per pair."""

    records = [{"alpha": p.alpha, "beta": p.beta, **shape_summary(p).as_dict()} for p in rows]
    return pd.DataFrame.from_records(records, columns=["alpha", "beta", "mean", "variance", "skewness",
                                                       "kurtosis", "mode", "cv"])


def partial_moment(p: Params, r: float, q: float) -> float:
    """Closed form of the integral of x^r f(x) over [0, q]."""

    if math.isinf(q):
        return real_moment(p, r)
    return real_moment(p, r) * reg_lower_gamma(_shape_index(p, r), core.gamma_argument(p, q))


def mean_deviation(p: Params) -> float:
    """E|X - mu| by quadrature split at the mean."""

    mu = mtsf(p)
    return integrate(lambda x: abs(x - mu) * core.pdf(p, x), p, "mean deviation", points=(mu,))


def mean_deviation_closed_form(p: Params) -> float:
    """2 mu F(mu) - 2 * integral of x f(x) over [0, mu]."""

    mu = mtsf(p)
    return 2.0 * mu * core.cdf(p, mu) - 2.0 * partial_moment(p, 1.0, mu)


def mgf_converges(p: Params, t: float) -> bool:
    """E[exp(tX)] is finite when 2 beta > 1, t <= 0, or 2 beta = 1 with t < alpha."""

    if t <= 0.0 or 2.0 * p.beta > 1.0:
        return True
    return 2.0 * p.beta == 1.0 and t < p.alpha


def mgf(p: Params, t: float) -> float:
    """Moment generating function by quadrature of exp(t x) f(x).

    Raises:
        DivergenceError: the expectation is infinite at t.
        ParameterDomainError: the expectation is finite but exceeds the float range at t.
    """

    if not mgf_converges(p, t):
        raise DivergenceError(literals.get("dist_mgf_divergent", t=t, alpha=p.alpha, beta=p.beta))
    if t == 0.0:
        return 1.0
    try:
        value = integrate(lambda x: math.exp(t * x + core.log_pdf(p, x)), p, "mgf")
    except OverflowError:
        value = math.inf
    if not math.isfinite(value):
        raise ParameterDomainError(literals.get("dist_mgf_overflow", t=t, alpha=p.alpha, beta=p.beta))
    return value


def mgf_series(p: Params, t: float, terms: int = SERIES_TERMS) -> float:
    """Truncated series sum of t^r E[X^r] / r! for r < terms."""

    total = 0.0
    for r in range(terms):
        total += t ** r * real_moment(p, float(r)) / math.factorial(r)
    return total


def cgf(p: Params, t: float) -> float:
    """Cumulant generating function ln M(t)."""

    return math.log(mgf(p, t))


def cf(p: Params, t: float) -> complex:
    """Characteristic function E[exp(i t X)], real and imaginary parts by quadrature."""

    if t == 0.0:
        return complex(1.0, 0.0)
    real = integrate(lambda x: math.cos(t * x) * core.pdf(p, x), p, "cf real part")
    imaginary = integrate(lambda x: math.sin(t * x) * core.pdf(p, x), p, "cf imaginary part")
    return complex(real, imaginary)


def _check_conditioning_point(p: Params, k: float) -> float:
    if not k >= 0.0:
        raise ParameterDomainError(literals.get("dist_conditioning_point", k=k))
    s = core.survival(p, k)
    if s <= 0.0:
        raise DegenerateDistributionError(literals.get("dist_survival_underflow", x=k))
    return s


def conditional_moment(p: Params, r: int, k: float) -> float:
    """E[X^r | X > k] by quadrature over [k, inf) divided by S(k)."""

    if isinstance(r, bool) or int(r) != r or r < 1:
        raise ParameterDomainError(literals.get("dist_moment_order", r=r))
    s = _check_conditioning_point(p, k)
    if k == 0.0:
        return raw_moment(p, r)
    tail = integrate(lambda x: math.exp(r * math.log(x) + core.log_pdf(p, x)), p, "conditional moment", lower=k)
    return tail / s


def conditional_moment_closed_form(p: Params, r: int, k: float) -> float:
    """E[X^r] * Q((3 beta + r) / (2 beta), alpha k^(2 beta)) / S(k)"""

    s = _check_conditioning_point(p, k)
    return raw_moment(p, r) * reg_upper_gamma(_shape_index(p, r), core.gamma_argument(p, k)) / s


def _check_curve_level(nu: float):
    if not 0.0 < nu <= 1.0:
        raise ParameterDomainError(literals.get("dist_level_out_of_range", value=nu))


def lorenz_curve(p: Params, nu: float) -> float:
    """L(nu) = (1 / mu) * integral of x f(x) over [0, quantile(nu)], by quadrature."""

    _check_curve_level(nu)
    if nu == 1.0:
        return 1.0
    q = core.quantile(p, nu)
    return integrate(lambda x: x * core.pdf(p, x), p, "lorenz curve", upper=q) / mtsf(p)


def lorenz_curve_closed_form(p: Params, nu: float) -> float:
    """P((3 beta + 1) / (2 beta), alpha q^(2 beta)) with q = quantile(nu)."""

    _check_curve_level(nu)
    if nu == 1.0:
        return 1.0
    return reg_lower_gamma(_shape_index(p, 1.0), core.gamma_argument(p, core.quantile(p, nu)))


def bonferroni_curve(p: Params, nu: float) -> float:
    """B(nu) = L(nu) / nu"""

    return lorenz_curve(p, nu) / nu


def bonferroni_curve_closed_form(p: Params, nu: float) -> float:
    return lorenz_curve_closed_form(p, nu) / nu


def lorenz_points(p: Params, levels: Iterable[float]) -> List[Tuple[float, float, float]]:
    """(nu, L(nu), B(nu)) for each level, for curve export."""

    return [(nu, lorenz_curve(p, nu), bonferroni_curve(p, nu)) for nu in levels]

