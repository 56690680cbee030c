"""Monte-Carlo study of the maximum likelihood and Lindley estimators.

Replication i draws its sample from the i-th child of SeedSequence(seed), so a
study is bit-reproducible whatever the number of workers, and aggregation runs
in replication order after all results are collected.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from power_maxwell.core.app import App
from power_maxwell.core.exceptions import ParameterDomainError, PowerMaxwellError, StudyAbortedError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.moments import mtsf
from power_maxwell.distribution.params import Params
from power_maxwell.distribution.sampling import Sampler
from power_maxwell.estimation.bayes import elicit_hyperparams, lindley_estimates
from power_maxwell.estimation.dataset import DataSet
from power_maxwell.estimation.mle import fit_mle
from power_maxwell.simulation.constants import (ESTIMATE_COLUMNS, INTERVAL_COLUMNS, MAX_FAILURE_SHARE,
                                                MIN_REPLICATIONS, SCENARIO_PARAMS, SCENARIO_SIZE, SIZE_SWEEP,
                                                SWEEP_PARAMS, Scenario)
from power_maxwell.simulation.literals import Literals as SimulationLiterals

app: App = App()
literals = LiteralsCore([SimulationLiterals])

Progress = Callable[[int], None]


@dataclass(frozen=True)
class SimConfig:
    """One cell of the study: true parameters, sample size and study settings."""

    true_params: Params
    n: int
    replications: int = field(default_factory=lambda: app.settings.replications)
    seed: int = field(default_factory=lambda: app.settings.seed)
    level: float = field(default_factory=lambda: app.settings.level)
    prior_variance: float = field(default_factory=lambda: app.settings.prior_variance)
    t_eval: float = field(default_factory=lambda: app.settings.t_eval)
    workers: int = field(default_factory=lambda: app.settings.workers)

    def __post_init__(self):
        if self.replications < MIN_REPLICATIONS:
            raise ParameterDomainError(literals.get("sim_replications_too_few", minimum=MIN_REPLICATIONS,
                                                    replications=self.replications))
        if self.n < 3:
            raise ParameterDomainError(literals.get("sim_sample_size", minimum=3, n=self.n))
        if self.workers < 1:
            raise ParameterDomainError(literals.get("sim_workers", workers=self.workers))
        if not 0.0 < self.level < 1.0:
            raise ParameterDomainError(literals.get("sim_config_value", name="level", value=self.level))
        for name in ("prior_variance", "t_eval"):
            if not getattr(self, name) > 0.0:
                raise ParameterDomainError(literals.get("sim_config_value", name=name, value=getattr(self, name)))

    def as_dict(self) -> dict:
        result = asdict(self)
        result["true_params"] = self.true_params.as_dict()
        return result


@dataclass(frozen=True)
class Replication:
    """Estimates from one simulated sample; estimates is None when it was excluded."""

    index: int
    estimates: Optional[Tuple[float, ...]] = None
    intervals: Optional[Tuple[float, ...]] = None
    reason: str = ""


@dataclass(frozen=True)
class EstimateSummary:
    """Average over included replications, its standard error and the mean squared error."""

    average: float
    mse: float
    standard_error: float


@dataclass(frozen=True)
class SimReport:
    config: SimConfig
    truth: Dict[str, float]
    estimates: Dict[str, EstimateSummary]
    intervals: Dict[str, float]
    convergence_failures: int

    @property
    def included(self) -> int:
        return self.config.replications - self.convergence_failures

    def as_dict(self) -> dict:
        return {"config": self.config.as_dict(), "truth": dict(self.truth),
                "estimates": {name: asdict(summary) for name, summary in self.estimates.items()},
                "intervals": dict(self.intervals), "convergence_failures": self.convergence_failures,
                "included": self.included}


def _true_values(cfg: SimConfig) -> Tuple[float, ...]:
    p = cfg.true_params
    return p.alpha, p.beta, mtsf(p), core.survival(p, cfg.t_eval), core.hazard(p, cfg.t_eval), p.alpha, p.beta


def replicate(cfg: SimConfig, seed: np.random.SeedSequence, index: int) -> Replication:
    """Samples, fits and estimates once. Failures are returned, not raised."""

    try:
        data = DataSet.of(Sampler(cfg.true_params, seed).sample(cfg.n), label="replication {}".format(index))
        fit = fit_mle(data, cfg.t_eval, cfg.level)
        if not fit.converged or fit.ci_alpha is None or fit.h_hat_at_t is None:
            return Replication(index, reason=literals.get("sim_replication_failed", index=index,
                                                          reason="no converged fit"))
        prior = elicit_hyperparams(cfg.true_params.alpha, cfg.true_params.beta, cfg.prior_variance)
        alpha_bl, beta_bl = lindley_estimates(data, prior, fit)
    except PowerMaxwellError as error:
        return Replication(index, reason=literals.get("sim_replication_failed", index=index, reason=error))

    estimates = (fit.alpha_hat, fit.beta_hat, fit.mttf_hat, fit.r_hat_at_t, fit.h_hat_at_t, alpha_bl, beta_bl)
    intervals = (fit.ci_alpha[0], fit.ci_alpha[1], fit.acl_alpha, fit.ci_beta[0], fit.ci_beta[1], fit.acl_beta)
    return Replication(index, estimates, intervals)


def _replicate_task(task: Tuple[SimConfig, np.random.SeedSequence, int]) -> Replication:
    return replicate(*task)


def _replications(cfg: SimConfig, progress: Optional[Progress]) -> List[Replication]:
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.replications)
    tasks = [(cfg, seed, index) for index, seed in enumerate(seeds)]
    results: List[Replication] = []
    if cfg.workers == 1:
        outcomes = map(_replicate_task, tasks)
        for outcome in outcomes:
            results.append(outcome)
            if progress is not None:
                progress(len(results))
        return results

    chunk = max(1, cfg.replications // (8 * cfg.workers))
    with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
        for outcome in executor.map(_replicate_task, tasks, chunksize=chunk):
            results.append(outcome)
            if progress is not None:
                progress(len(results))
    return sorted(results, key=lambda r: r.index)


def aggregate(cfg: SimConfig, replications: Sequence[Replication]) -> SimReport:
    """Averages, MSEs and mean intervals over the included replications.

    Raises:
        StudyAbortedError: more than 20% of the replications were excluded.
    """

    included = [r for r in sorted(replications, key=lambda r: r.index) if r.estimates is not None]
    failures = len(replications) - len(included)
    for excluded in (r for r in replications if r.estimates is None):
        logging.debug(excluded.reason)
    if failures > MAX_FAILURE_SHARE * cfg.replications or not included:
        raise StudyAbortedError(literals.get("sim_too_many_failures", failures=failures,
                                             replications=cfg.replications, share=MAX_FAILURE_SHARE))

    truth = dict(zip(ESTIMATE_COLUMNS, _true_values(cfg)))
    estimates = np.array([r.estimates for r in included])
    intervals = np.array([r.intervals for r in included])
    m = len(included)
    summaries = {}
    for column, name in enumerate(ESTIMATE_COLUMNS):
        values = estimates[:, column]
        spread = float(values.std(ddof=1)) if m > 1 else 0.0
        summaries[name] = EstimateSummary(average=float(values.mean()),
                                          mse=float(np.mean((values - truth[name]) ** 2)),
                                          standard_error=spread / math.sqrt(m))
    interval_averages = {name: float(intervals[:, column].mean()) for column, name in enumerate(INTERVAL_COLUMNS)}
    return SimReport(config=cfg, truth=truth, estimates=summaries, intervals=interval_averages,
                     convergence_failures=failures)


def run_study(cfg: SimConfig, progress: Progress = None) -> SimReport:
    """Runs cfg.replications independent replications and aggregates them.

    Args:
        cfg: Study configuration.
        progress: Called with the number of finished replications.
    """

    p = cfg.true_params
    logging.info(literals.get("sim_study_started", alpha=p.alpha, beta=p.beta, n=cfg.n,
                              replications=cfg.replications, seed=cfg.seed, workers=cfg.workers))
    report = aggregate(cfg, _replications(cfg, progress))
    logging.info(literals.get("sim_study_finished", n=cfg.n, failures=report.convergence_failures,
                              replications=cfg.replications))
    return report


def run_grid(configs: Iterable[SimConfig], progress: Progress = None) -> List[SimReport]:
    """run_study for each configuration, in order. progress counts across the whole grid."""

    reports = []
    done = 0
    for cfg in configs:
        cell_progress = None
        if progress is not None:
            cell_progress = lambda count, base=done: progress(base + count)  # noqa: E731
        reports.append(run_study(cfg, cell_progress))
        done += cfg.replications
    return reports


def scenario_configs(scenario: Scenario, base: SimConfig) -> List[SimConfig]:
    """Expands a scenario into study cells.

    SIZES sweeps n over 10, 20, 30, 50 at (0.75, 0.75); PARAMS runs n = 20 at
    (0.5, 0.75), (0.5, 1.5), (1.5, 0.5) and (2.5, 2.5); SINGLE is base itself.
    All other settings come from base.
    """

    if scenario is Scenario.SIZES:
        return [replace(base, true_params=Params(*SWEEP_PARAMS), n=n) for n in SIZE_SWEEP]
    if scenario is Scenario.PARAMS:
        return [replace(base, true_params=Params(*pair), n=SCENARIO_SIZE) for pair in SCENARIO_PARAMS]
    return [base]


# region tables

def estimates_frame(reports: Iterable[SimReport]) -> pd.DataFrame:
    """Average and MSE rows per study cell, estimator columns in publication order."""

    rows = []
    for report in reports:
        key = {"alpha": report.config.true_params.alpha, "beta": report.config.true_params.beta,
               "n": report.config.n, "t_eval": report.config.t_eval}
        rows.append({**key, "statistic": "average",
                     **{name: report.estimates[name].average for name in ESTIMATE_COLUMNS}})
        rows.append({**key, "statistic": "mse", **{name: report.estimates[name].mse for name in ESTIMATE_COLUMNS}})
    return pd.DataFrame(rows, columns=["alpha", "beta", "n", "t_eval", "statistic", *ESTIMATE_COLUMNS])


def intervals_frame(reports: Iterable[SimReport]) -> pd.DataFrame:
    """Average interval bounds and lengths per study cell."""

    rows = [{"alpha": r.config.true_params.alpha, "beta": r.config.true_params.beta, "n": r.config.n,
             "level": r.config.level, **r.intervals} for r in reports]
    return pd.DataFrame(rows, columns=["alpha", "beta", "n", "level", *INTERVAL_COLUMNS])

# endregion
