"""special module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the special module."""

    _errors = {
        "sf_shape_not_positive": _("Gamma shape must be positive, got a={a}."),
        "sf_argument_negative": _("Incomplete gamma argument must be nonnegative, got z={z}."),
        "sf_probability_out_of_range": _("Probability must lie in [0, 1], got p={p}."),
        "sf_no_convergence": _("{function} did not converge for a={a}, z={z} after {iterations} iterations."),
    }
