"""scripts module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the scripts module."""

    _titles = {
        "pmad_title": _("pmad"),
        "pmad_properties_title": _("Properties of alpha={alpha}, beta={beta}"),
    }
    _info = {
        "pmad_description": _("Power Maxwell distribution: fitting, simulation, properties and model selection."),
        "pmad_command_started": _("Running {command}, output in \"{output_dir}\""),
        "pmad_command_finished": _("{command} finished with exit code {code}"),
        "pmad_oracle_skipped": _("Quadrature posterior means skipped: {reason}"),
        "pmad_entropy_skipped": _("{kind} entropy of order {order} skipped: {reason}"),
        "pmad_help_input": _("Data file: positive reals separated by blanks or commas, '#' starts a comment line"),
        "pmad_help_alpha": _("Scale parameter alpha"),
        "pmad_help_beta": _("Shape parameter beta"),
        "pmad_help_n": _("Sample size of every simulated replication"),
        "pmad_help_reps": _("Monte-Carlo replications per study cell"),
        "pmad_help_seed": _("Root seed of the simulation"),
        "pmad_help_level": _("Confidence level of the asymptotic intervals"),
        "pmad_help_t_eval": _("Time at which reliability and hazard are estimated"),
        "pmad_help_prior_variance": _("Prior variance of both gamma priors"),
        "pmad_help_bayes": _("Also compute Lindley estimates under a gamma prior"),
        "pmad_help_out": _("Output directory"),
        "pmad_help_quiet": _("Only log warnings and errors, no title or progress bar"),
        "pmad_help_workers": _("Worker processes for the simulation"),
        "pmad_help_scenario": _("Simulation grid: sample sizes, parameter pairs or a single cell"),
        "pmad_help_models": _("Models to compare, all registered models by default"),
    }
    _errors = {
        "pmad_input_required": _("The {command} command needs an input data file."),
        "pmad_params_required": _("The {command} command needs --alpha and --beta."),
        "pmad_usage_error": _("{message} ({usage})"),
        "pmad_fit_not_converged": _("The maximum likelihood fit of {label} did not converge."),
    }
