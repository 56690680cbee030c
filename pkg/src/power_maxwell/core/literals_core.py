"""Messages shared by every package, merged with the package's own literals"""

from power_maxwell.core.app import App
from power_maxwell.core.value_dicts_base import ValueDictsBase

app: App = App()


class LiteralsCore(ValueDictsBase):
    """Entry point for messages: core literals plus the Literals classes given.

        literals = LiteralsCore([DistributionLiterals])
        literals.get("dist_params_not_positive", alpha=alpha, beta=beta)
    """

    _debug = {
        "function_params": _("Parameters passed to the function:"),
    }
    _info = {
        "core_settings_loaded": _("Settings loaded from {path}"),
    }
    _errors = {
        "core_unexpected_error": _("Unexpected error: {error}"),
    }
