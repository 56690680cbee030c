"""Test configuration file for reference module.

    contains:
        - Fixture published_cell: study at the printed n = 50 simulation row"""

import pytest

from power_maxwell.distribution.params import Params
from power_maxwell.reference.published import SIMULATION_N50
from power_maxwell.simulation.study import SimConfig, run_study


@pytest.fixture(scope="module")
def published_cell():
    """1000-replication study at n = 50, (0.75, 0.75); computed once per module"""
    row = SIMULATION_N50
    cfg = SimConfig(true_params=Params(row.alpha, row.beta), n=row.n, replications=1000, seed=20190101,
                    level=0.95, prior_variance=0.5, t_eval=1.0, workers=1)
    return run_study(cfg)
