""" Fits every registered model to a data file and writes the ranked
goodness-of-fit table """

import logging
from typing import List

import pandas as pd

import power_maxwell.core.log_tools as log_tools
import power_maxwell.filesystem.writers as writers
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.filesystem.constants import FileNames
from power_maxwell.filesystem.parsers import ingest
from power_maxwell.model_selection.gof import GofReport, evaluate_all
from power_maxwell.model_selection.literals import Literals as ModelSelectionLiterals
from power_maxwell.model_selection.summary import summarize
from power_maxwell.scripts.constants import EXIT_SUCCESS
from power_maxwell.scripts.script_common import RunManifest, write_report

literals = LiteralsCore([ModelSelectionLiterals])

GOF_COLUMNS = ["model", "alpha", "beta", "neg_loglik", "aic", "aicc", "bic", "ks"]


def gof_frame(reports: List[GofReport]) -> pd.DataFrame:
    """One row per model in ranking order; beta is empty for one-parameter models."""

    rows = [{"model": r.model_name, "alpha": r.params[0], "beta": r.params[1] if len(r.params) > 1 else None,
             "neg_loglik": r.neg_loglik, "aic": r.aic, "aicc": r.aicc, "bic": r.bic, "ks": r.ks} for r in reports]
    return pd.DataFrame(rows, columns=GOF_COLUMNS)


def main(manifest: RunManifest) -> int:
    d = ingest(manifest.input_path)
    reports = evaluate_all(d, manifest.flag("models"))
    frame = gof_frame(reports)

    log_tools.log_table(["model", "-logL", "AIC", "BIC", "K-S"],
                        [(r.model_name, r.neg_loglik, r.aic, r.bic, r.ks) for r in reports])
    logging.info(literals.get("ms_ranking_title", label=d.label, n=d.n))
    summary = summarize(d)
    logging.info(literals.get("ms_summary_title", label=d.label))
    log_tools.log_list([f"{name} = {value}" for name, value in summary.as_dict().items()])

    writers.write_frame(manifest.output_path(FileNames.GOF), frame)
    write_report(manifest, {"data": {"label": d.label, "n": d.n}, "gof": [r.as_dict() for r in reports],
                            "summary": summary.as_dict()})
    return EXIT_SUCCESS
