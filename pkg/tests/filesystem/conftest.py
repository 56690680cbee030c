"""Test configuration file for filesystem module.

Add here whatever you want to pass as a fixture in your tests."""

import pytest


class FileContents(object):
    """Class to create the file contents fixture"""
    mixed_separators = "# bladder remission times\n0.08, 2.09 3.48\n\n4.87\t6.94\n  # trailing comment\n8.66\n"
    mixed_values = [0.08, 2.09, 3.48, 4.87, 6.94, 8.66]
    bad_token = "1.0 2.0\n3.0 abc\n"
    negative_value = "1.0\n2.0\n-3.0\n"
    too_few = "1.0 2.0\n"


@pytest.fixture
def filecontents():
    """Sample file contents for parser tests"""
    return FileContents()
