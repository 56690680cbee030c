"""Information criteria, Kolmogorov-Smirnov distance and model ranking.

Competing models plug in through ModelFit: a name, a parameter count, a fit
step producing parameters, the negative log-likelihood and the fitted
distribution function.
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Type, Union

import numpy as np

from power_maxwell.core.exceptions import ConvergenceError, ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.maxwell import maxwell_cdf, maxwell_log_likelihood
from power_maxwell.distribution.params import Params
from power_maxwell.estimation.dataset import DataSet
from power_maxwell.estimation.mle import FitResult, fit_mle, log_likelihood
from power_maxwell.model_selection.constants import ModelName
from power_maxwell.model_selection.literals import Literals as ModelSelectionLiterals

literals = LiteralsCore([ModelSelectionLiterals])


class InformationCriteria(NamedTuple):
    aic: float
    aicc: Optional[float]
    bic: float


@dataclass(frozen=True)
class GofReport:
    """Goodness-of-fit row of one model on one dataset."""

    model_name: str
    params: Tuple[float, ...]
    k: int
    n: int
    neg_loglik: float
    aic: float
    aicc: Optional[float]
    bic: float
    ks: float

    def as_dict(self) -> dict:
        return asdict(self)


def information_criteria(neg_loglik: float, k: int, n: int) -> InformationCriteria:
    """AIC = 2k + 2 negLL, AICC = AIC + 2k(k+1)/(n-k-1), BIC = k ln n + 2 negLL.

    AICC is None when n <= k + 1.
    """

    if isinstance(k, bool) or int(k) != k or k < 0:
        raise ParameterDomainError(literals.get("ms_parameter_count", k=k))
    if not n >= 1:
        raise ParameterDomainError(literals.get("ms_sample_size", n=n))
    aic = 2.0 * k + 2.0 * neg_loglik
    bic = k * math.log(n) + 2.0 * neg_loglik
    if n <= k + 1:
        logging.debug(literals.get("ms_aicc_absent", n=n, limit=k + 1))
        return InformationCriteria(aic, None, bic)
    return InformationCriteria(aic, aic + 2.0 * k * (k + 1) / (n - k - 1), bic)


def ks_statistic(d: Union[DataSet, Sequence[float]], model_cdf: Callable[[float], float]) -> float:
    """D = max over sorted data of max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).

    Accepts a DataSet or any nonempty sequence of observations.
    """

    xs = np.sort(d.array() if isinstance(d, DataSet) else np.asarray(d, dtype=float))
    n = xs.size
    fitted = np.array([model_cdf(float(x)) for x in xs])
    if np.any((fitted < 0.0) | (fitted > 1.0)):
        raise ParameterDomainError(literals.get("ms_cdf_out_of_range", value=float(fitted[(fitted < 0.0) |
                                                                                         (fitted > 1.0)][0])))
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - fitted), np.max(fitted - (i - 1) / n)))


def fit_maxwell_baseline(d: DataSet) -> Tuple[float, float]:
    """Closed-form Maxwell fit alpha = 3n / (2 sum z^2), with its negative log-likelihood."""

    values = d.array()
    alpha_hat = 1.5 * d.n / float(np.square(values).sum())
    return alpha_hat, -maxwell_log_likelihood(alpha_hat, values)


# region plug-in models

class ModelFit(ABC):
    """A competing model: fitted by fit(), then queried for neg_loglik() and cdf()."""

    name: str = ""
    k: int = 0

    def __init__(self):
        self.params: Tuple[float, ...] = ()

    @abstractmethod
    def fit(self, d: DataSet) -> "ModelFit":
        pass

    @abstractmethod
    def neg_loglik(self, d: DataSet) -> float:
        pass

    @abstractmethod
    def cdf(self, x: float) -> float:
        pass


class PowerMaxwellModel(ModelFit):
    name = ModelName.POWER_MAXWELL.value
    k = 2

    def __init__(self):
        super().__init__()
        self.result: Optional[FitResult] = None

    def fit(self, d: DataSet) -> "PowerMaxwellModel":
        self.result = fit_mle(d)
        if not self.result.converged:
            raise ConvergenceError(literals.get("ms_fit_not_converged", model=self.name, label=d.label))
        self.params = (self.result.alpha_hat, self.result.beta_hat)
        return self

    def neg_loglik(self, d: DataSet) -> float:
        return -log_likelihood(d, Params(*self.params))

    def cdf(self, x: float) -> float:
        return core.cdf(Params(*self.params), x)


class MaxwellModel(ModelFit):
    name = ModelName.MAXWELL.value
    k = 1

    def fit(self, d: DataSet) -> "MaxwellModel":
        self.params = (fit_maxwell_baseline(d)[0],)
        return self

    def neg_loglik(self, d: DataSet) -> float:
        return -maxwell_log_likelihood(self.params[0], d.array())

    def cdf(self, x: float) -> float:
        return maxwell_cdf(self.params[0], x)


MODELS: Dict[str, Type[ModelFit]] = {model.name: model for model in (PowerMaxwellModel, MaxwellModel)}


def create_model(name: str) -> ModelFit:
    if name not in MODELS:
        raise ParameterDomainError(literals.get("ms_unknown_model", name=name, names=", ".join(MODELS)))
    return MODELS[name]()

# endregion


def evaluate(model: ModelFit, d: DataSet) -> GofReport:
    """Fits model to d and computes its goodness-of-fit row."""

    model.fit(d)
    neg_loglik = model.neg_loglik(d)
    criteria = information_criteria(neg_loglik, model.k, d.n)
    report = GofReport(model_name=model.name, params=tuple(model.params), k=model.k, n=d.n, neg_loglik=neg_loglik,
                       aic=criteria.aic, aicc=criteria.aicc, bic=criteria.bic, ks=ks_statistic(d, model.cdf))
    logging.info(literals.get("ms_model_fitted", model=report.model_name, neg_loglik=report.neg_loglik,
                              aic=report.aic, bic=report.bic, ks=report.ks))
    return report


def rank_models(reports: Iterable[GofReport]) -> List[GofReport]:
    """Ascending AIC, ties broken by BIC then K-S; equal rows keep their input order."""

    return sorted(reports, key=lambda r: (r.aic, r.bic, r.ks))


def evaluate_all(d: DataSet, names: Sequence[str] = None) -> List[GofReport]:
    """Ranked reports of the named models, all registered models by default."""

    return rank_models(evaluate(create_model(name), d) for name in (names or list(MODELS)))
