"""Loads settings from the settings.json file"""

import pathlib
import os
import json


class Settings(object):
    """Application settings"""

    _LOCALES: str = "locales"
    _CONFIG_SETTINGS_FILE_NAME: str = "logging-config.json"
    _SETTINGS_FILE_NAME: str = "settings.json"
    _CURRENT_PATH: str = os.path.dirname(os.path.realpath(__file__))

    # defaults
    root_path: pathlib.Path = pathlib.Path(_CURRENT_PATH).parent.absolute()
    locales_path: pathlib.Path = pathlib.Path.joinpath(root_path, _LOCALES).absolute()
    log_config_file_path: pathlib.Path = pathlib.Path(_CURRENT_PATH, _CONFIG_SETTINGS_FILE_NAME)
    settings_path: pathlib.Path = pathlib.Path(_CURRENT_PATH, _SETTINGS_FILE_NAME)
    language: str = "en"
    seed: int = 20190101
    replications: int = 5000
    level: float = 0.95
    t_eval: float = 1.0
    prior_variance: float = 0.5
    max_iterations: int = 200
    quadrature_tolerance: float = 1e-10
    workers: int = 1
    output_dir: str = "pmad-output"

    def __init__(self):
        """Loads settings"""

        self.load(self.settings_path.as_posix())

    @staticmethod
    def read_settings_from_file(path: str) -> dict:
        """Loads settings from settings.json

        Args:
            path: Path to read settings.json from
        """

        with open(path, "r") as settings_file:
            settings = json.load(settings_file)

        return settings

    def load(self, path: str):
        """Assigns settings. Keys missing from the file keep their defaults."""

        settings = self.read_settings_from_file(path)

        # Add your setting mappings here
        self.language = settings.get("language", self.language)
        self.seed = int(settings.get("seed", self.seed))
        self.replications = int(settings.get("replications", self.replications))
        self.level = float(settings.get("level", self.level))
        self.t_eval = float(settings.get("t_eval", self.t_eval))
        self.prior_variance = float(settings.get("prior_variance", self.prior_variance))
        self.max_iterations = int(settings.get("max_iterations", self.max_iterations))
        self.quadrature_tolerance = float(settings.get("quadrature_tolerance", self.quadrature_tolerance))
        self.workers = int(settings.get("workers", self.workers))
        self.output_dir = settings.get("output_dir", self.output_dir)
