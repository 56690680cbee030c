"""simulation module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the simulation module."""

    _titles = {
        "sim_study_title": _("Monte-Carlo study"),
    }
    _info = {
        "sim_study_started": _("Study alpha={alpha}, beta={beta}, n={n}: {replications} replications, seed {seed}, "
                               "{workers} worker(s)"),
        "sim_study_finished": _("Study n={n} finished: {failures} of {replications} replications excluded"),
        "sim_replication_failed": _("Replication {index} excluded: {reason}"),
    }
    _errors = {
        "sim_replications_too_few": _("At least {minimum} replications are needed, got {replications}."),
        "sim_sample_size": _("Sample size must be at least {minimum}, got n={n}."),
        "sim_workers": _("Worker count must be at least 1, got {workers}."),
        "sim_too_many_failures": _("{failures} of {replications} replications failed, above the allowed share "
                                   "{share:.0%}."),
        "sim_config_value": _("{name} must be positive, got {value}."),
    }
