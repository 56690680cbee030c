"""Test configuration file for scripts module.

Add here whatever you want to pass as a fixture in your tests."""

import pathlib

import pytest


class DataFiles(object):
    """Class used to create the datafiles fixture"""
    skewed = ("# remission times\n0.08 2.09 3.48 4.87 6.94 8.66 13.11 23.63 0.20 2.23 3.52 4.98\n"
              "6.97 9.02 13.29 0.40 2.26 3.57 5.06 7.09 9.22 13.80 25.74 0.50\n"
              "2.46, 3.64, 5.09, 7.26, 9.47, 14.24, 25.82, 0.51, 2.54, 3.70\n"
              "5.17 7.28 9.74 14.76 26.31 0.81 2.62 3.82 5.32 7.32 10.06 14.77 32.15\n")
    equal = "1.0 1.0 1.0 1.0\n"
    bad = "1.0 2.0\nthree\n"

    def __init__(self, directory: pathlib.Path):
        self.directory = directory

    def write(self, name: str, content: str) -> str:
        path = self.directory / name
        path.write_text(content)
        return str(path)


@pytest.fixture
def datafiles(tmp_path):
    """Writes sample data files into a temporary directory"""
    return DataFiles(tmp_path)
