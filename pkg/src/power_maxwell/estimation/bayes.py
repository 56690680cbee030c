"""Bayes estimation under independent gamma priors and squared-error loss.

Posterior means are approximated with the two-parameter Lindley expansion
around the maximum likelihood estimate and computed exactly, up to quadrature
error, on a tensor-product Simpson grid.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import integrate as scipy_integrate
from scipy import optimize

from power_maxwell.core.exceptions import BoxEscapeError, ConvergenceError, ParameterDomainError, \
    SingularInformationError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.constants import LOG_FOUR_OVER_SQRT_PI
from power_maxwell.distribution.params import Params
from power_maxwell.estimation.constants import (ORACLE_EDGE_MASS, ORACLE_EDGE_SHARE, ORACLE_HALF_WIDTH,
                                                ORACLE_NODES, TauVariant)
from power_maxwell.estimation.dataset import DataSet
from power_maxwell.estimation.literals import Literals as EstimationLiterals
from power_maxwell.estimation.mle import FitResult, fit_mle, log_likelihood, observed_information, weighted_sums

literals = LiteralsCore([EstimationLiterals])


@dataclass(frozen=True)
class GammaPrior:
    """alpha ~ Gamma(a, rate b), beta ~ Gamma(c, rate d), independent."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        values = (self.a, self.b, self.c, self.d)
        if not all(v > 0.0 and not math.isinf(v) for v in values):
            raise ParameterDomainError(literals.get("est_prior_not_positive", values=values))

    @property
    def mean(self) -> Tuple[float, float]:
        return self.a / self.b, self.c / self.d

    @property
    def variance(self) -> Tuple[float, float]:
        return self.a / self.b ** 2, self.c / self.d ** 2

    def log_density(self, p: Params) -> float:
        """Log prior kernel, without normalizing constants."""

        return ((self.a - 1.0) * math.log(p.alpha) - self.b * p.alpha
                + (self.c - 1.0) * math.log(p.beta) - self.d * p.beta)


@dataclass(frozen=True)
class BayesResult:
    """Lindley estimates and, when requested, the quadrature posterior means."""

    alpha_lindley: float
    beta_lindley: float
    alpha_oracle: Optional[float] = None
    beta_oracle: Optional[float] = None

    @property
    def oracle_abs_gap(self) -> Optional[Tuple[float, float]]:
        if self.alpha_oracle is None:
            return None
        return abs(self.alpha_lindley - self.alpha_oracle), abs(self.beta_lindley - self.beta_oracle)


def elicit_hyperparams(prior_mean_alpha: float, prior_mean_beta: float, prior_variance: float) -> GammaPrior:
    """Gamma prior with the given mean and variance per parameter: shape m^2 / v, rate m / v."""

    if not (prior_mean_alpha > 0.0 and prior_mean_beta > 0.0 and prior_variance > 0.0):
        raise ParameterDomainError(literals.get("est_prior_not_positive",
                                                values=(prior_mean_alpha, prior_mean_beta, prior_variance)))
    return GammaPrior(a=prior_mean_alpha ** 2 / prior_variance, b=prior_mean_alpha / prior_variance,
                      c=prior_mean_beta ** 2 / prior_variance, d=prior_mean_beta / prior_variance)


def log_posterior_kernel(d: Optional[DataSet], prior: GammaPrior, p: Params) -> float:
    """Log-likelihood plus log prior, up to an additive constant. d=None means no data."""

    loglik = 0.0 if d is None else log_likelihood(d, p)
    return loglik + prior.log_density(p)


# region Lindley

def _tau(information: np.ndarray, variant: TauVariant) -> np.ndarray:
    if variant is TauVariant.RECIPROCAL:
        with np.errstate(divide="ignore"):
            return 1.0 / information
    return np.linalg.inv(information)


def lindley_estimates(d: DataSet, prior: GammaPrior, fit: FitResult,
                      variant: TauVariant = TauVariant.INVERSE) -> Tuple[float, float]:
    """Two-parameter Lindley approximation of the posterior means.

    u = theta_i, rho = ln prior, l_ijk third log-likelihood derivatives with
    l30 = 3n / alpha^3, l21 = 0, l12 = -4 S2, l03 = 2n / beta^3 - 8 alpha S3.

    Raises:
        ConvergenceError: the fit did not converge.
        SingularInformationError: the observed information cannot be inverted.
    """

    if not fit.converged:
        raise ConvergenceError(literals.get("est_not_converged"))
    alpha, beta = fit.alpha_hat, fit.beta_hat
    information = observed_information(d, fit.params)
    try:
        np.linalg.cholesky(information)
    except np.linalg.LinAlgError:
        raise SingularInformationError(literals.get("est_singular_information", alpha=alpha, beta=beta))
    tau = _tau(information, variant)

    n = d.n
    _, _, a2, a3 = weighted_sums(d.log_array(), alpha, beta)
    l30 = 3.0 * n / alpha ** 3
    l21 = 0.0
    l12 = -4.0 * a2 / alpha
    l03 = 2.0 * n / beta ** 3 - 8.0 * a3
    rho_alpha = (prior.a - 1.0) / alpha - prior.b
    rho_beta = (prior.c - 1.0) / beta - prior.d

    t11, t12, t21, t22 = tau[0, 0], tau[0, 1], tau[1, 0], tau[1, 1]
    first = l30 * t11 + 2.0 * l21 * t12 + l12 * t22
    second = l21 * t11 + 2.0 * l12 * t12 + l03 * t22
    alpha_bayes = alpha + rho_alpha * t11 + rho_beta * t12 + 0.5 * (t11 * first + t12 * second)
    beta_bayes = beta + rho_alpha * t21 + rho_beta * t22 + 0.5 * (t21 * first + t22 * second)
    logging.debug(literals.get("est_lindley", alpha=alpha_bayes, beta=beta_bayes))
    return float(alpha_bayes), float(beta_bayes)

# endregion

# region quadrature posterior

def _posterior_mode(d: DataSet, prior: GammaPrior) -> Params:
    fit = fit_mle(d)
    start = np.log([fit.alpha_hat, fit.beta_hat])

    def objective(theta: np.ndarray) -> float:
        return -log_posterior_kernel(d, prior, Params(math.exp(theta[0]), math.exp(theta[1])))

    outcome = optimize.minimize(objective, start, method="Nelder-Mead",
                                options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000})
    return Params(math.exp(outcome.x[0]), math.exp(outcome.x[1]))


def _posterior_sd(d: DataSet, prior: GammaPrior, mode: Params) -> Tuple[float, float]:
    """Laplace standard deviations from the negative Hessian of the kernel at the mode."""

    hessian = observed_information(d, mode) + np.diag([(prior.a - 1.0) / mode.alpha ** 2,
                                                       (prior.c - 1.0) / mode.beta ** 2])
    try:
        np.linalg.cholesky(hessian)
        covariance = np.linalg.inv(hessian)
        return math.sqrt(covariance[0, 0]), math.sqrt(covariance[1, 1])
    except np.linalg.LinAlgError:
        return tuple(math.sqrt(v) for v in prior.variance)


def _log_kernel_grid(d: DataSet, prior: GammaPrior, alphas: np.ndarray, betas: np.ndarray) -> np.ndarray:
    """Kernel on the grid, rows indexed by alpha and columns by beta."""

    log_x = d.log_array()
    n = d.n
    sum_log_x = float(log_x.sum())
    w = 2.0 * np.outer(betas, log_x)
    top = w.max(axis=1)
    log_power_sums = top + np.log(np.exp(w - top[:, None]).sum(axis=1))
    log_alpha = np.log(alphas)[:, None]
    log_beta = np.log(betas)[None, :]
    loglik = (n * LOG_FOUR_OVER_SQRT_PI + 1.5 * n * log_alpha + n * log_beta
              - np.exp(log_alpha + log_power_sums[None, :]) + (3.0 * betas[None, :] - 1.0) * sum_log_x)
    log_prior = ((prior.a - 1.0) * log_alpha - prior.b * alphas[:, None]
                 + (prior.c - 1.0) * log_beta - prior.d * betas[None, :])
    return loglik + log_prior


def _axis(center: float, sd: float, half_width: float, nodes: int) -> np.ndarray:
    lower = max(center - half_width * sd, center * 1e-6)
    return np.linspace(lower, center + half_width * sd, nodes)


def _edge_mass(weights: np.ndarray, total: float, alphas: np.ndarray, betas: np.ndarray) -> float:
    """Share of the mass in the outer strips of the box."""

    strip = max(1, int(round(ORACLE_EDGE_SHARE * (weights.shape[0] - 1))))
    inner = scipy_integrate.simpson(scipy_integrate.simpson(weights[strip:-strip, strip:-strip],
                                                            x=betas[strip:-strip], axis=1),
                                    x=alphas[strip:-strip])
    return max(0.0, 1.0 - inner / total)


def _grid_means(d: DataSet, prior: GammaPrior, mode: Params, sd: Tuple[float, float], half_width: float,
                nodes: int) -> Tuple[float, float, float, float]:
    alphas = _axis(mode.alpha, sd[0], half_width, nodes)
    betas = _axis(mode.beta, sd[1], half_width, nodes)
    log_kernel = _log_kernel_grid(d, prior, alphas, betas)
    weights = np.exp(log_kernel - log_kernel.max())

    def double_integral(values: np.ndarray) -> float:
        return float(scipy_integrate.simpson(scipy_integrate.simpson(values, x=betas, axis=1), x=alphas))

    total = double_integral(weights)
    alpha_mean = double_integral(weights * alphas[:, None]) / total
    beta_mean = double_integral(weights * betas[None, :]) / total
    return alpha_mean, beta_mean, _edge_mass(weights, total, alphas, betas), total


def posterior_mean_oracle(d: Optional[DataSet], prior: GammaPrior,
                          nodes: int = ORACLE_NODES) -> Tuple[float, float]:
    """Posterior means of alpha and beta by 2-D Simpson quadrature.

    The box spans the posterior mode -/+ 10 Laplace standard deviations per axis
    (clipped above zero) and is doubled once when the outer strips hold more than
    1e-3 of the mass. Without data the posterior is the prior.

    Raises:
        BoxEscapeError: the mass at the edges stays above 1e-3 after expansion.
    """

    if d is None:
        return prior.mean

    mode = _posterior_mode(d, prior)
    sd = _posterior_sd(d, prior, mode)
    alpha_mean, beta_mean, edge, _ = _grid_means(d, prior, mode, sd, ORACLE_HALF_WIDTH, nodes)
    if edge > ORACLE_EDGE_MASS:
        logging.info(literals.get("est_oracle_box_expanded", mass=edge))
        alpha_mean, beta_mean, edge, _ = _grid_means(d, prior, mode, sd, 2.0 * ORACLE_HALF_WIDTH, nodes)
        if edge > ORACLE_EDGE_MASS:
            raise BoxEscapeError(literals.get("est_box_escape", mass=edge))
    logging.debug(literals.get("est_oracle", alpha=alpha_mean, beta=beta_mean))
    return alpha_mean, beta_mean

# endregion


def fit_bayes_lindley(d: DataSet, prior: GammaPrior, fit: FitResult = None, with_oracle: bool = True) -> BayesResult:
    """Lindley estimates under the prior, with the quadrature oracle alongside.

    Args:
        d: The sample.
        prior: Gamma prior.
        fit: A converged MLE of d; computed when omitted.
        with_oracle: Whether to also compute the quadrature posterior means.
    """

    fit = fit_mle(d) if fit is None else fit
    alpha_bayes, beta_bayes = lindley_estimates(d, prior, fit)
    if not with_oracle:
        return BayesResult(alpha_bayes, beta_bayes)
    alpha_oracle, beta_oracle = posterior_mean_oracle(d, prior)
    return BayesResult(alpha_bayes, beta_bayes, alpha_oracle, beta_oracle)
