"""Messages of the configure script"""

from power_maxwell.core.app import App
from power_maxwell.core.value_dicts_base import ValueDictsBase

app: App = App()


class Literals(ValueDictsBase):
    _info = {
        "i18n_language_configured": _("Messages language set to {language}"),
        "i18n_setting_configured": _("Setting {name} set to {value}"),
    }
