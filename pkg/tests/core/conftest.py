"""Test configuration file for core module.

Add here whatever you want to pass as a fixture in your tests."""

import logging
import os
import pathlib

import pytest


class CoreTestsFixture(object):
    """Class used to create the coretestsfixture fixture"""
    default_loglevel = logging.INFO
    root_path = pathlib.Path(os.path.dirname(os.path.realpath(__file__))).absolute()
    fake_config_file_path = str(root_path / "missing-logging-config.json")
    fake_error_exception_message = "Exception error message"
    cannot_config_message = f"Cannot configure logger: {fake_error_exception_message}"
    default_configure_success = "Default configuration loaded successfully."
    fake_config_data_file_content = r'{"logging": {"foo": "foo"}}'
    settings_content = r'{"language": "es", "seed": 7, "replications": 300}'
    parameters = {"alpha": 0.75, "beta": 0.75, "reps": 100}


@pytest.fixture
def coretestsfixture():
    """Static values for testing the core package"""
    return CoreTestsFixture()
