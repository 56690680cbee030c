""" Runs the Monte-Carlo study of the estimators and writes the estimate and
interval tables """

import logging

import power_maxwell.filesystem.writers as writers
from power_maxwell.core.app import App
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.params import Params
from power_maxwell.filesystem.constants import FileNames
from power_maxwell.scripts.constants import DEFAULT_SIMULATION_SIZE, EXIT_SUCCESS
from power_maxwell.scripts.script_common import RunManifest, write_report
from power_maxwell.simulation.constants import SWEEP_PARAMS, Scenario
from power_maxwell.simulation.literals import Literals as SimulationLiterals
from power_maxwell.simulation.study import SimConfig, estimates_frame, intervals_frame, run_grid, scenario_configs
from power_maxwell.tools.cli import ProgressReporter

app: App = App()
literals = LiteralsCore([SimulationLiterals])


def base_config(manifest: RunManifest) -> SimConfig:
    """Study settings from the manifest flags, falling back to settings.json."""

    params = manifest.params or Params(*SWEEP_PARAMS)
    return SimConfig(true_params=params,
                     n=manifest.flag("n", DEFAULT_SIMULATION_SIZE),
                     replications=manifest.flag("reps", app.settings.replications),
                     seed=manifest.flag("seed", app.settings.seed),
                     level=manifest.flag("level", app.settings.level),
                     prior_variance=manifest.flag("prior_variance", app.settings.prior_variance),
                     t_eval=manifest.flag("t_eval", app.settings.t_eval),
                     workers=manifest.flag("workers", app.settings.workers))


def main(manifest: RunManifest) -> int:
    configs = scenario_configs(Scenario(manifest.flag("scenario", Scenario.SIZES.value)), base_config(manifest))
    logging.info(literals.get("sim_study_title"))

    reporter = None
    if not manifest.flag("quiet", False):
        reporter = ProgressReporter(literals.get("sim_study_title"), sum(cfg.replications for cfg in configs))
    try:
        reports = run_grid(configs, reporter)
    finally:
        if reporter is not None:
            reporter.close()

    writers.write_frame(manifest.output_path(FileNames.ESTIMATES), estimates_frame(reports))
    writers.write_frame(manifest.output_path(FileNames.INTERVALS), intervals_frame(reports))
    write_report(manifest, {"studies": [report.as_dict() for report in reports]})
    return EXIT_SUCCESS
