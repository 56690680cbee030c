"""Test configuration file for estimation module.

    contains:
        - Class Draws: seeded samples of the power Maxwell law"""

import pytest

from power_maxwell.distribution.params import Params
from power_maxwell.distribution.sampling import Sampler
from power_maxwell.estimation.dataset import DataSet


class Draws(object):
    """Class used to create the draws fixture"""
    true_params = Params(0.75, 0.75)

    @classmethod
    def of_size(cls, n: int, seed: int = 20190101) -> DataSet:
        return DataSet.of(Sampler(cls.true_params, seed).sample(n), f"draws-{n}")


@pytest.fixture
def draws():
    """Seeded power Maxwell samples"""
    return Draws()
