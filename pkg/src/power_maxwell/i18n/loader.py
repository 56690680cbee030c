"""Initializes gettext"""

import gettext
from power_maxwell.core.settings import Settings


def setup(settings: Settings, skip_catalogs: bool = False):
    """Sets up translations for the selected language.

    Falls back to the identity translation when no compiled catalog exists for
    the language, so _() is always installed.

    Args:
        settings: Application settings with the language and locales path.
        skip_catalogs: If True only the identity translation is installed.
    """

    if skip_catalogs:
        gettext.NullTranslations().install()
        return

    gettext.translation("base", localedir=settings.locales_path, languages=[settings.language],
                        fallback=True).install()
