""" Fits the power Maxwell distribution to a data file and writes the estimate,
interval, goodness-of-fit and plot tables """

import logging
from dataclasses import asdict

import pandas as pd

import power_maxwell.filesystem.writers as writers
from power_maxwell.core.app import App
from power_maxwell.core.exceptions import BoxEscapeError, ConvergenceError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.estimation.bayes import BayesResult, elicit_hyperparams, fit_bayes_lindley
from power_maxwell.estimation.literals import Literals as EstimationLiterals
from power_maxwell.estimation.mle import FitResult, fit_mle
from power_maxwell.filesystem.constants import FileNames
from power_maxwell.filesystem.parsers import ingest
from power_maxwell.model_selection.gof import evaluate_all, fit_maxwell_baseline
from power_maxwell.model_selection.plot_data import ecdf_frame, qq_frame
from power_maxwell.model_selection.summary import summarize
from power_maxwell.scripts.constants import EXIT_SUCCESS
from power_maxwell.scripts.literals import Literals as ScriptsLiterals
from power_maxwell.scripts.script_common import RunManifest, write_report
from power_maxwell.simulation.constants import ESTIMATE_COLUMNS, INTERVAL_COLUMNS

app: App = App()
literals = LiteralsCore([ScriptsLiterals, EstimationLiterals])


def _bayes(manifest: RunManifest, d, fit: FitResult) -> BayesResult:
    prior = elicit_hyperparams(fit.alpha_hat, fit.beta_hat, manifest.flag("prior_variance",
                                                                          app.settings.prior_variance))
    try:
        return fit_bayes_lindley(d, prior, fit, with_oracle=True)
    except BoxEscapeError as error:
        logging.warning(literals.get("pmad_oracle_skipped", reason=error))
        return fit_bayes_lindley(d, prior, fit, with_oracle=False)


def estimates_row(fit: FitResult, bayes: BayesResult = None) -> dict:
    """Point estimates in simulation-table column order; Bayes columns empty without a prior."""

    values = (fit.alpha_hat, fit.beta_hat, fit.mttf_hat, fit.r_hat_at_t, fit.h_hat_at_t,
              None if bayes is None else bayes.alpha_lindley, None if bayes is None else bayes.beta_lindley)
    return dict(zip(ESTIMATE_COLUMNS, values))


def intervals_row(fit: FitResult) -> dict:
    if fit.ci_alpha is None:
        return dict.fromkeys(INTERVAL_COLUMNS)
    values = (fit.ci_alpha[0], fit.ci_alpha[1], fit.acl_alpha, fit.ci_beta[0], fit.ci_beta[1], fit.acl_beta)
    return dict(zip(INTERVAL_COLUMNS, values))


def main(manifest: RunManifest) -> int:
    """Fits the data file of the manifest.

    Raises:
        ConvergenceError: the profile likelihood has no maximum for the data.
    """

    d = ingest(manifest.input_path)
    fit = fit_mle(d, manifest.flag("t_eval", app.settings.t_eval), manifest.flag("level", app.settings.level))
    if not fit.converged:
        raise ConvergenceError(literals.get("pmad_fit_not_converged", label=d.label))
    logging.info(literals.get("est_fit_title", label=d.label, n=d.n))

    bayes = _bayes(manifest, d, fit) if manifest.flag("bayes", False) else None
    maxwell_alpha, maxwell_neg_loglik = fit_maxwell_baseline(d)
    gof = evaluate_all(d)
    summary = summarize(d)

    p = fit.params
    key = {"data": d.label, "n": d.n, "t_eval": fit.t_eval, "level": fit.level}
    writers.write_frame(manifest.output_path(FileNames.ESTIMATES),
                        pd.DataFrame([{**key, **estimates_row(fit, bayes)}]))
    writers.write_frame(manifest.output_path(FileNames.INTERVALS), pd.DataFrame([{**key, **intervals_row(fit)}]))
    writers.write_frame(manifest.output_path(FileNames.ECDF), ecdf_frame(d, lambda x: core.cdf(p, x)))
    writers.write_frame(manifest.output_path(FileNames.QQ), qq_frame(d, lambda u: core.quantile(p, u)))

    write_report(manifest, {
        "data": {"label": d.label, "n": d.n},
        "mle": fit.as_dict(),
        "bayes": None if bayes is None else {**asdict(bayes), "oracle_abs_gap": bayes.oracle_abs_gap},
        "maxwell": {"alpha_hat": maxwell_alpha, "neg_loglik": maxwell_neg_loglik},
        "gof": [report.as_dict() for report in gof],
        "summary": summary.as_dict(),
    })
    return EXIT_SUCCESS
