"""Random variate generation"""

import logging
from typing import Union

import numpy as np

from power_maxwell.core.exceptions import ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution import core
from power_maxwell.distribution.constants import GAMMA_SHAPE
from power_maxwell.distribution.literals import Literals as DistributionLiterals
from power_maxwell.distribution.params import Params

literals = LiteralsCore([DistributionLiterals])

SeedLike = Union[int, np.random.SeedSequence]


class Sampler(object):
    """Reproducible stream of draws for one parameter pair.

    Holds mutable generator state: use one Sampler per thread of execution.
    """

    def __init__(self, params: Params, seed: SeedLike):
        """
        Args:
            params: Distribution parameters.
            seed: Unsigned 64-bit seed or a spawned SeedSequence.
        """

        self.params = params
        self.seed = seed
        self._generator = np.random.default_rng(seed)
        logging.debug(literals.get("dist_sampler_created", alpha=params.alpha, beta=params.beta))

    def sample(self, n: int) -> np.ndarray:
        """Draws n variates by the exact transform X = (G / alpha)^(1 / (2 beta)), G ~ Gamma(3/2, 1).

        Args:
            n: Number of draws, at least 1.

        Returns:
            Array of n positive reals.
        """

        self._check_size(n)
        g = self._generator.gamma(GAMMA_SHAPE, 1.0, size=n)
        return np.exp((np.log(g) - np.log(self.params.alpha)) / (2.0 * self.params.beta))

    def sample_by_inversion(self, n: int) -> np.ndarray:
        """Draws n variates by numeric inversion of the distribution function."""

        self._check_size(n)
        uniforms = self._generator.uniform(0.0, 1.0, size=n)
        return np.array([core.quantile(self.params, float(u)) for u in uniforms])

    @staticmethod
    def _check_size(n: int):
        if int(n) != n or n < 1:
            raise ParameterDomainError(literals.get("dist_sample_size", n=n))
