"""Logging Formatter to add colors to console records using Colorama"""
import logging
from colorama import Fore, Back, Style

_LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.WHITE,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.BLACK + Back.RED,
}


class ColorFormatter(logging.Formatter):
    """Colors the whole record by level. Levels without a color use the plain format."""

    def __init__(self, format_str: str, datefmt: str = "%Y-%m-%d %H:%M:%S"):
        super().__init__(format_str, datefmt)
        self._formatters = {
            level: logging.Formatter(color + format_str + Style.RESET_ALL, datefmt)
            for level, color in _LEVEL_COLORS.items()
        }

    def format(self, record):
        formatter = self._formatters.get(record.levelno)
        if formatter is None:
            return super().format(record)
        return formatter.format(record)
