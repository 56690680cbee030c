""" This script allows the user to configure some initial settings """
import argparse
import json
import logging

from power_maxwell.core.app import App
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.core.settings import Settings
from power_maxwell.i18n.literals import Literals as I18nLiterals

app: App = App()
literals = LiteralsCore([I18nLiterals])


def main(language: str = None, seed: int = None, replications: int = None, workers: int = None):
    """ Sets the configuration inside settings.json; arguments left as None keep their stored value """
    settings_path = Settings.settings_path.as_posix()

    with open(settings_path, 'r') as settings_file:
        settings = json.load(settings_file)
        logging.info(literals.get("core_settings_loaded", path=settings_path))

    changes = {"language": language, "seed": seed, "replications": replications, "workers": workers}
    for key, value in changes.items():
        if value is not None:
            settings[key] = value
            logging.info(literals.get("i18n_setting_configured", name=key, value=value))
    if language is not None:
        logging.info(literals.get("i18n_language_configured", language=language))

    with open(settings_path, 'w') as settings_file:
        json.dump(settings, settings_file, indent=2)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--language")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--replications", type=int)
    parser.add_argument("--workers", type=int)
    args = parser.parse_args()
    main(args.language, args.seed, args.replications, args.workers)
