"""Process-wide settings plus the gettext and logging bootstrap.

Every module builds an App at import time. Only the first App of a process, or
one built with reconfigure=True, installs the translations and the logging
configuration; later ones only share the settings.
"""

import power_maxwell.core.log_setup
import power_maxwell.i18n.loader
from power_maxwell.core.settings import Settings


class App(object):
    """Holds the Settings instance shared by every module."""

    settings: Settings = Settings()
    _bootstrapped: bool = False

    def __init__(self, skip_i18n: bool = False, reconfigure: bool = False):
        """
        Args:
            skip_i18n: Install the identity translation instead of the catalogs.
            reconfigure: Run the bootstrap again even if it already ran.
        """

        if App._bootstrapped and not reconfigure:
            return
        power_maxwell.i18n.loader.setup(self.settings, skip_i18n)
        power_maxwell.core.log_setup.configure(self.settings.log_config_file_path)
        App._bootstrapped = True
