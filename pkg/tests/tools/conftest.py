"""Test configuration file for tools module.

Add here whatever you want to pass as a fixture in your texts."""

import argparse
from unittest.mock import Mock

import pytest


class ValidatorData(object):
    """Class used to create the validatordata fixture"""
    invalid_path = "/invalid/path"
    title = "pmad"
    label = "Fitting"

    @staticmethod
    def parser() -> Mock:
        return Mock(spec=argparse.ArgumentParser)


@pytest.fixture
def validatordata():
    """Sample values for testing the argument validators"""
    return ValidatorData()
