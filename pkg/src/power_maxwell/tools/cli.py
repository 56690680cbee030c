"""Contains tools for working with the command line"""

from typing import Optional

from clint.textui import progress
from pyfiglet import Figlet


def print_title(text: str):
    """Prints a title in the console"""
    f = Figlet()
    print(f.renderText(text))


class ProgressReporter(object):
    """Progress bar over a known number of steps, updated with the count of finished steps."""

    def __init__(self, label: str, expected_size: int):
        self._bar: Optional[progress.Bar] = progress.Bar(label=label, expected_size=expected_size)

    def __call__(self, done: int):
        if self._bar is not None:
            self._bar.show(done)

    def close(self):
        if self._bar is not None:
            self._bar.done()
            self._bar = None


if __name__ == "__main__":
    help(__name__)
