"""tools module literals."""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the tools module."""

    _info = {
        "val_path_argument_not_valid": _("The path specified in the {argument} argument is invalid or does not "
                                         "exist."),
        "val_positive_argument_not_valid": _("The {argument} argument must be a positive number, got {value}."),
        "val_probability_argument_not_valid": _("The {argument} argument must lie strictly between 0 and 1, got "
                                                "{value}."),
        "val_count_argument_not_valid": _("The {argument} argument must be an integer of at least {minimum}, got "
                                          "{value}."),
    }
