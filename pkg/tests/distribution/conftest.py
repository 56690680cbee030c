"""Test configuration file for distribution module.

    contains:
        - Class Oracles: closed forms built on scipy used as independent references"""

import math

import pytest
from scipy import special as scipy_special


class Oracles(object):
    """Reference values through u = alpha x^(2 beta) ~ Gamma(3/2)"""

    @staticmethod
    def cdf(alpha: float, beta: float, x: float) -> float:
        return float(scipy_special.gammainc(1.5, alpha * x ** (2.0 * beta)))

    @staticmethod
    def raw_moment(alpha: float, beta: float, r: float) -> float:
        return 2.0 / math.sqrt(math.pi) * alpha ** (-r / (2.0 * beta)) \
            * scipy_special.gamma((3.0 * beta + r) / (2.0 * beta))

    @staticmethod
    def quantile(alpha: float, beta: float, prob: float) -> float:
        return (float(scipy_special.gammaincinv(1.5, prob)) / alpha) ** (1.0 / (2.0 * beta))


@pytest.fixture
def oracles():
    """Independent closed-form references"""
    return Oracles()
