"""Test configuration file for power-maxwell package.

This code is executed once per unit test session.
Add here whatever you want to pass as a fixture in your tests.

    ie: (see Samples example)
        - Add a class that contains what you want to pass as a fixture in your tests.
        - Create a fixture with that same lowered name that returns an instance to that class."""

import os

import pytest

from power_maxwell.distribution.params import Params
from power_maxwell.estimation.dataset import DataSet


class Samples(object):
    """Class used to create the samples fixture"""
    maxwell = Params(1.0, 1.0)
    sweep = Params(0.75, 0.75)
    heavy = Params(0.5, 0.5)
    narrow = Params(2.0, 2.0)
    small_beta = Params(1.0, 0.25)
    grid = [Params(0.5, 0.5), Params(1.0, 1.0), Params(0.75, 0.75), Params(2.0, 2.0), Params(3.0, 1.5)]
    ones = DataSet.of([1.0, 1.0, 1.0], "ones")
    tiny = DataSet.of([0.4, 0.9, 1.3, 2.2, 0.7], "tiny")
    skewed = DataSet.of([0.08, 2.09, 3.48, 4.87, 6.94, 8.66, 13.11, 23.63, 0.20, 2.23, 3.52, 4.98, 6.97,
                         9.02, 13.29, 0.40, 2.26, 3.57, 5.06, 7.09, 9.22, 13.80, 25.74, 0.50, 2.46, 3.64,
                         5.09, 7.26, 9.47, 14.24, 25.82, 0.51, 2.54, 3.70, 5.17, 7.28, 9.74, 14.76, 26.31,
                         0.81, 2.62, 3.82, 5.32, 7.32, 10.06, 14.77, 32.15], "skewed")
    bladder_path = os.environ.get("PMAD_BLADDER_DATA")


@pytest.fixture
def samples():
    """Parameter pairs and small data sets shared by the numeric tests"""
    return Samples()
