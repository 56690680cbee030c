"""Defines constants for the module."""

from enum import Enum

# A two-parameter fit needs curvature in both directions.
MIN_SAMPLE_SIZE = 3
BRACKET_EXPANSIONS = 60
ROOT_TOLERANCE = 1e-14
ORACLE_NODES = 201
ORACLE_HALF_WIDTH = 10.0
ORACLE_EDGE_SHARE = 0.05
ORACLE_EDGE_MASS = 1e-3


class TauVariant(Enum):
    """How the Lindley expansion turns the observed information into tau."""

    INVERSE = "inverse"
    RECIPROCAL = "reciprocal"
