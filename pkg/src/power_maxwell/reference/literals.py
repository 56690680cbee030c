"""reference module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the reference module."""

    _titles = {
        "ref_errata_title": _("Published formulas and values not followed"),
    }
    _info = {
        "ref_shape_cell_off": _("({alpha}, {beta}) {column}: computed {computed:.4f}, published {published:.4f}, "
                                "difference {difference:.2e}"),
        "ref_shape_cells_checked": _("{checked} published cells compared, {off} outside tolerance"),
        "ref_erratum": _("{topic}: printed {printed} / implemented {implemented} ({resolution})"),
    }
    _errors = {
        "ref_unknown_column": _("Shape table has no column {column}."),
    }
