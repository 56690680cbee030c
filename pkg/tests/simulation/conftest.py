"""Test configuration file for simulation module.

    contains:
        - Class Studies: small study configurations
        - Fixture size_sweep: 1000-replication studies at n = 10, 20, 30, 50"""

import pytest

from power_maxwell.distribution.params import Params
from power_maxwell.simulation.constants import Scenario
from power_maxwell.simulation.study import SimConfig, run_grid, scenario_configs


class Studies(object):
    """Class used to create the studies fixture"""
    small = SimConfig(true_params=Params(0.75, 0.75), n=30, replications=100, seed=20190101, level=0.95,
                      prior_variance=0.5, t_eval=1.0, workers=1)
    sweep = SimConfig(true_params=Params(0.75, 0.75), n=10, replications=1000, seed=20190101, level=0.95,
                      prior_variance=0.5, t_eval=1.0, workers=1)
    interval_values = (0.5, 1.0, 0.5, 0.6, 0.9, 0.3)


@pytest.fixture
def studies():
    """Small Monte-Carlo configurations"""
    return Studies()


@pytest.fixture(scope="module")
def size_sweep():
    """Reports of the sample-size sweep keyed by n; computed once per module"""
    return {report.config.n: report for report in run_grid(scenario_configs(Scenario.SIZES, Studies.sweep))}
