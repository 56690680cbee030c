"""Logging configuration

The root logger carries two console handlers from logging-config.json: stdout
for records up to WARNING and stderr for ERROR and above. A command run adds a
file handler in its output directory, so the root level follows the most
verbose handler and each handler filters by its own level.
"""

import json
import logging as logger
from logging.config import dictConfig
from typing import List

from power_maxwell.core.color_formatter import ColorFormatter

_RUN_LOG_FORMAT = "%(asctime)s %(levelname)-8s %(module)-15s %(message)s"


def configure(filepath):
    """Configures the Python logging using a dictionary from a json file, falling
    back to a basic stream handler when the file cannot be used.

    Args:
        filepath: Path of the file which contains the configuration
        (See https://docs.python.org/3/library/logging.config.html#logging-config-api)
    """

    try:
        configure_by_file(filepath)
        add_filter_to_console_handler(logger.WARNING)
        add_colored_formatter_to_console_handlers()
    except Exception as err:
        logger.error(f"Cannot configure logger: {format(err)}")
        configure_by_default(logger.INFO)


def configure_by_default(loglevel):
    """Configures the root logger with a single stream handler at loglevel."""

    log = logger.getLogger()
    log.setLevel(loglevel)
    handler = logger.StreamHandler()
    handler.setLevel(loglevel)
    log.addHandler(handler)
    log.info("Default configuration loaded successfully.")


def configure_by_file(filepath):
    """Configures the Python logging using the "logging" entry of a json file

    Raises:
        FileNotFoundError: If filepath doesn't exist.
        OSError: If filepath cannot be opened.
        KeyError: If the file has no "logging" entry.
    """

    with open(filepath, "r") as config_file:
        config = json.load(config_file)
    dictConfig(config["logging"])


def add_filter_to_console_handler(loglevel):
    """Drops records above loglevel from the first (stdout) handler."""

    log = logger.getLogger()
    handler = log.handlers[0]
    handler.addFilter(lambda record: record.levelno <= loglevel)


def console_handlers() -> List[logger.Handler]:
    """Stream handlers of the root logger, file handlers excluded."""

    return [handler for handler in logger.getLogger().handlers
            if isinstance(handler, logger.StreamHandler) and not isinstance(handler, logger.FileHandler)]


def add_run_file_handler(filepath: str, loglevel=logger.DEBUG) -> logger.Handler:
    """Attaches a file handler for one command run and lowers the root level to loglevel if needed.

    Returns:
        The handler, so the caller can remove it when the run finishes.
    """

    log = logger.getLogger()
    file_handler = logger.FileHandler(filename=filepath, encoding="utf-8")
    file_handler.setLevel(loglevel)
    file_handler.setFormatter(logger.Formatter(_RUN_LOG_FORMAT))
    log.addHandler(file_handler)
    if log.getEffectiveLevel() > loglevel:
        log.setLevel(loglevel)
    return file_handler


def set_console_level(loglevel):
    """Raises every console handler to at least loglevel; file handlers keep theirs (--quiet)."""

    for handler in console_handlers():
        handler.setLevel(max(handler.level, loglevel))


def add_colored_formatter_to_console_handlers():
    """Replaces the formatter of each console handler with a ColorFormatter of the same format."""

    log = logger.getLogger()
    for handler in log.handlers:
        color_formatter = ColorFormatter(handler.formatter._fmt)
        handler.setFormatter(color_formatter)
