"""Maximum likelihood estimation by profile reduction.

For fixed beta the alpha score 3n / (2 alpha) - sum x^(2 beta) has the unique
root alpha(beta) = 3n / (2 sum x^(2 beta)). Substituting it leaves the profiled
score

    g(beta) = n / beta + 3 sum ln x - 3n * sum x^(2 beta) ln x / sum x^(2 beta)

which is strictly decreasing, so its sign change is bracketed by geometric
expansion and refined with Brent's method.
"""

import logging
import math
from dataclasses import asdict, dataclass, replace
from typing import Optional, Tuple

import numpy as np
from scipy import optimize
from scipy.stats import norm

from power_maxwell.core.app import App
from power_maxwell.core.exceptions import (DegenerateDistributionError, ParameterDomainError,
                                           SingularInformationError)
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.constants import LOG_FOUR_OVER_SQRT_PI, MAX_LOG, TRIGAMMA_THREE_HALVES
from power_maxwell.distribution.moments import mtsf
from power_maxwell.distribution.params import Params
from power_maxwell.estimation.constants import BRACKET_EXPANSIONS, ROOT_TOLERANCE
from power_maxwell.estimation.dataset import DataSet
from power_maxwell.estimation.literals import Literals as EstimationLiterals

app: App = App()
literals = LiteralsCore([EstimationLiterals])

Interval = Tuple[float, float]


@dataclass(frozen=True)
class FitResult:
    """Outcome of fit_mle.

    Variances and intervals are None when the observed information is singular
    or the fit did not converge; derived estimates are None when they cannot be
    evaluated at the fitted parameters.
    """

    alpha_hat: float
    beta_hat: float
    loglik: float
    n: int
    converged: bool
    iterations: int
    level: float
    t_eval: float
    info_matrix: Optional[Tuple[Tuple[float, float], Tuple[float, float]]] = None
    var_alpha: Optional[float] = None
    var_beta: Optional[float] = None
    ci_alpha: Optional[Interval] = None
    ci_beta: Optional[Interval] = None
    mttf_hat: Optional[float] = None
    r_hat_at_t: Optional[float] = None
    h_hat_at_t: Optional[float] = None

    @property
    def params(self) -> Params:
        return Params(self.alpha_hat, self.beta_hat)

    @property
    def information_singular(self) -> bool:
        return self.converged and self.var_alpha is None

    @property
    def acl_alpha(self) -> Optional[float]:
        return None if self.ci_alpha is None else self.ci_alpha[1] - self.ci_alpha[0]

    @property
    def acl_beta(self) -> Optional[float]:
        return None if self.ci_beta is None else self.ci_beta[1] - self.ci_beta[0]

    def as_dict(self) -> dict:
        result = asdict(self)
        result["acl_alpha"] = self.acl_alpha
        result["acl_beta"] = self.acl_beta
        return result


# region sufficient statistics

def weighted_sums(log_x: np.ndarray, alpha: float, beta: float) -> Tuple[float, float, float, float]:
    """alpha * sum x^(2 beta) (ln x)^k for k = 0..3, without overflowing x^(2 beta)."""

    w = 2.0 * beta * log_x
    top = float(w.max())
    e = np.exp(w - top)
    total = float(e.sum())
    log_a0 = math.log(alpha) + top + math.log(total)
    if log_a0 > MAX_LOG:
        return math.inf, math.inf, math.inf, math.inf
    a0 = math.exp(log_a0)
    return (a0, a0 * float(np.dot(e, log_x)) / total, a0 * float(np.dot(e, log_x ** 2)) / total,
            a0 * float(np.dot(e, log_x ** 3)) / total)


def _log_power_sum(log_x: np.ndarray, beta: float) -> float:
    """ln sum x^(2 beta)"""

    w = 2.0 * beta * log_x
    top = float(w.max())
    return top + math.log(float(np.exp(w - top).sum()))

# endregion


def log_likelihood(d: DataSet, p: Params) -> float:
    """n ln 4 - (n/2) ln pi + (3n/2) ln alpha + n ln beta - alpha sum x^(2 beta) + (3 beta - 1) sum ln x"""

    log_x = d.log_array()
    n = d.n
    a0 = weighted_sums(log_x, p.alpha, p.beta)[0]
    return (n * LOG_FOUR_OVER_SQRT_PI + 1.5 * n * math.log(p.alpha) + n * math.log(p.beta) - a0
            + (3.0 * p.beta - 1.0) * float(log_x.sum()))


def score(d: DataSet, p: Params) -> Tuple[float, float]:
    """(dl/dalpha, dl/dbeta)"""

    log_x = d.log_array()
    n = d.n
    a0, a1, _, _ = weighted_sums(log_x, p.alpha, p.beta)
    return 1.5 * n / p.alpha - a0 / p.alpha, n / p.beta + 3.0 * float(log_x.sum()) - 2.0 * a1


def profile_alpha(d: DataSet, beta: float) -> float:
    """alpha(beta) = 3n / (2 sum x^(2 beta))"""

    if not beta > 0.0:
        raise ParameterDomainError(literals.get("est_beta_not_positive", beta=beta))
    return math.exp(math.log(1.5 * d.n) - _log_power_sum(d.log_array(), beta))


def profiled_score(d: DataSet, beta: float) -> float:
    """Beta score along the curve alpha = alpha(beta). Strictly decreasing in beta."""

    log_x = d.log_array()
    w = 2.0 * beta * log_x
    e = np.exp(w - w.max())
    weighted_log_mean = float(np.dot(e, log_x)) / float(e.sum())
    return d.n / beta + 3.0 * float(log_x.sum()) - 3.0 * d.n * weighted_log_mean


def profile_log_likelihood(d: DataSet, beta: float) -> float:
    return log_likelihood(d, Params(profile_alpha(d, beta), beta))


def starting_beta(d: DataSet) -> float:
    """Matches Var(ln X) = trigamma(3/2) / (4 beta^2) to the sample variance of ln x."""

    variance = float(np.var(d.log_array()))
    if not variance > 0.0:
        return 1.0
    return math.sqrt(TRIGAMMA_THREE_HALVES / (4.0 * variance))


def observed_information(d: DataSet, p: Params) -> np.ndarray:
    """Negative Hessian of the log-likelihood.

    [[3n / (2 alpha^2), 2 S1], [2 S1, n / beta^2 + 4 alpha S2]] with
    S_k = sum x^(2 beta) (ln x)^k.
    """

    n = d.n
    _, a1, a2, _ = weighted_sums(d.log_array(), p.alpha, p.beta)
    off_diagonal = 2.0 * a1 / p.alpha
    return np.array([[1.5 * n / p.alpha ** 2, off_diagonal],
                     [off_diagonal, n / p.beta ** 2 + 4.0 * a2]])


def _z_value(level: float) -> float:
    if not 0.0 < level < 1.0:
        raise ParameterDomainError(literals.get("est_level_out_of_range", level=level))
    return float(norm.ppf(0.5 + level / 2.0))


def _covariance(information: np.ndarray) -> Optional[np.ndarray]:
    if not np.all(np.isfinite(information)):
        return None
    try:
        np.linalg.cholesky(information)
        return np.linalg.inv(information)
    except np.linalg.LinAlgError:
        return None


def _bracket(d: DataSet) -> Tuple[Optional[Tuple[float, float]], int, float]:
    """Finds [lower, upper] with g(lower) > 0 > g(upper).

    Returns the bracket (None when none was found), the number of expansions and
    the last beta tried with a representable alpha(beta).
    """

    start = starting_beta(d)
    if float(np.ptp(d.log_array())) == 0.0:
        # equal observations: g(beta) = n / beta never changes sign
        return None, 0, start
    g = profiled_score(d, start)
    if g == 0.0:
        return (start, start), 0, start

    lower = upper = start
    best = start
    for expansion in range(1, BRACKET_EXPANSIONS + 1):
        if g > 0.0:
            lower, upper = upper, 2.0 * upper
            candidate = upper
        else:
            lower, upper = 0.5 * lower, lower
            candidate = lower
        g_candidate = profiled_score(d, candidate)
        if 0.0 < profile_alpha(d, candidate) < math.inf:
            best = candidate
        if (g > 0.0) != (g_candidate > 0.0) or g_candidate == 0.0:
            return (lower, upper), expansion, best

    return None, BRACKET_EXPANSIONS, best


def _derived(p: Params, t_eval: float) -> Tuple[float, float, Optional[float]]:
    """MTTF, R(t) and H(t) at the fitted parameters, by invariance."""

    try:
        h = core.hazard(p, t_eval)
    except DegenerateDistributionError:
        logging.warning(literals.get("est_hazard_unavailable", t=t_eval))
        h = None
    return mtsf(p), core.survival(p, t_eval), h


def fit_mle(d: DataSet, t_eval: float = None, level: float = None) -> FitResult:
    """Maximizes the log-likelihood over (alpha, beta).

    Args:
        d: The sample.
        t_eval: Time at which reliability and hazard are estimated, defaults to the t_eval setting.
        level: Confidence level of the asymptotic intervals, defaults to the level setting.

    Returns:
        FitResult. converged is False, with the best iterate, when the profiled
        score has no sign change (e.g. all observations equal) or Brent's method
        exceeds the iteration cap.
    """

    t_eval = app.settings.t_eval if t_eval is None else t_eval
    level = app.settings.level if level is None else level
    if not t_eval > 0.0:
        raise ParameterDomainError(literals.get("est_t_eval", t=t_eval))
    z = _z_value(level)

    bracket, expansions, best = _bracket(d)
    if bracket is None:
        logging.warning(literals.get("est_no_root", beta=best))
        p = Params(profile_alpha(d, best), best)
        return FitResult(alpha_hat=p.alpha, beta_hat=p.beta, loglik=log_likelihood(d, p), n=d.n, converged=False,
                         iterations=expansions, level=level, t_eval=t_eval)

    logging.debug(literals.get("est_bracket", lower=bracket[0], upper=bracket[1]))
    if bracket[0] == bracket[1]:
        beta_hat, iterations, converged = bracket[0], 0, True
    else:
        beta_hat, outcome = optimize.brentq(lambda b: profiled_score(d, b), bracket[0], bracket[1],
                                            xtol=ROOT_TOLERANCE, maxiter=app.settings.max_iterations,
                                            full_output=True, disp=False)
        iterations, converged = outcome.iterations, outcome.converged

    p = Params(profile_alpha(d, beta_hat), beta_hat)
    loglik = log_likelihood(d, p)
    iterations += expansions
    if not converged:
        return FitResult(alpha_hat=p.alpha, beta_hat=p.beta, loglik=loglik, n=d.n, converged=False,
                         iterations=iterations, level=level, t_eval=t_eval)

    logging.debug(literals.get("est_mle_fitted", alpha=p.alpha, beta=p.beta, loglik=loglik, iterations=iterations))
    information = observed_information(d, p)
    covariance = _covariance(information)
    mttf_hat, r_hat, h_hat = _derived(p, t_eval)
    result = FitResult(alpha_hat=p.alpha, beta_hat=p.beta, loglik=loglik, n=d.n, converged=True,
                       iterations=iterations, level=level, t_eval=t_eval,
                       info_matrix=tuple(tuple(float(v) for v in row) for row in information),
                       mttf_hat=mttf_hat, r_hat_at_t=r_hat, h_hat_at_t=h_hat)
    if covariance is None:
        logging.warning(literals.get("est_singular_information", alpha=p.alpha, beta=p.beta))
        return result

    var_alpha, var_beta = float(covariance[0, 0]), float(covariance[1, 1])
    return replace(result, var_alpha=var_alpha, var_beta=var_beta, ci_alpha=_interval(p.alpha, var_alpha, z),
                   ci_beta=_interval(p.beta, var_beta, z))


def _interval(estimate: float, variance: float, z: float) -> Interval:
    half_width = z * math.sqrt(variance)
    return estimate - half_width, estimate + half_width


def confidence_interval(fit: FitResult, level: float) -> Tuple[Interval, Interval]:
    """Asymptotic normal intervals estimate -/+ z sqrt(var) for alpha and beta.

    Raises:
        SingularInformationError: the fit carries no variances.
    """

    z = _z_value(level)
    if fit.var_alpha is None or fit.var_beta is None:
        raise SingularInformationError(literals.get("est_singular_information", alpha=fit.alpha_hat,
                                                    beta=fit.beta_hat))
    return _interval(fit.alpha_hat, fit.var_alpha, z), _interval(fit.beta_hat, fit.var_beta, z)


def fit_mle_joint(d: DataSet) -> Params:
    """Two-dimensional quasi-Newton maximization in (ln alpha, ln beta).

    Independent of the profile path, used to cross-check it.
    """

    log_x = d.log_array()
    sum_log_x = float(log_x.sum())
    n = d.n
    beta_start = starting_beta(d)
    start = np.array([math.log(profile_alpha(d, beta_start)), math.log(beta_start)])

    def objective(theta: np.ndarray) -> Tuple[float, np.ndarray]:
        alpha, beta = math.exp(theta[0]), math.exp(theta[1])
        a0, a1, _, _ = weighted_sums(log_x, alpha, beta)
        value = (n * LOG_FOUR_OVER_SQRT_PI + 1.5 * n * theta[0] + n * theta[1] - a0
                 + (3.0 * beta - 1.0) * sum_log_x)
        gradient = np.array([1.5 * n - a0, n + beta * (3.0 * sum_log_x - 2.0 * a1)])
        return -value, -gradient

    outcome = optimize.minimize(objective, start, jac=True, method="BFGS", options={"gtol": 1e-10,
                                                                                    "maxiter": 1000})
    return Params(math.exp(outcome.x[0]), math.exp(outcome.x[1]))
