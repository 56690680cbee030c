"""Defines constants for the module."""

import math
from enum import Enum

# The power transform maps the distribution onto a gamma law of this shape.
GAMMA_SHAPE = 1.5
SQRT_PI = math.sqrt(math.pi)
TWO_OVER_SQRT_PI = 2.0 / SQRT_PI
LOG_FOUR_OVER_SQRT_PI = math.log(4.0) - 0.5 * math.log(math.pi)
# Trigamma at 3/2, the variance of ln G for G ~ Gamma(3/2).
TRIGAMMA_THREE_HALVES = math.pi ** 2 / 2.0 - 4.0
MAX_LOG = 709.782712893384
# Upper probability used to truncate integration ranges before the infinite tail piece.
UPPER_PROBABILITY = 1.0 - 1e-12


class Trend(Enum):
    """Monotonicity of a sequence evaluated on a grid."""

    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"
    NON_MONOTONE = "non-monotone"


class EntropyKind(Enum):
    """Entropy families indexed by an order parameter."""

    RENYI = "renyi"
    DELTA = "delta"
    GENERALIZED = "generalized"
