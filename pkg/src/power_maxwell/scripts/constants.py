"""Defines constants for the module."""

from enum import Enum

LOG_FILE_NAME = "pmad.log"
# Orders of the Renyi and delta entropies reported by the properties command.
ENTROPY_ORDERS = (0.5, 2.0, 3.0)
GENERALIZED_ENTROPY_ORDERS = (-1.0, 0.5, 2.0)
LORENZ_POINTS = (0.1, 0.25, 0.5, 0.75, 0.9)
DEFAULT_SIMULATION_SIZE = 50
EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class Command(Enum):
    """Sub-commands of pmad."""

    FIT = "fit"
    SIMULATE = "simulate"
    PROPERTIES = "properties"
    GOF = "gof"
    TABLE = "table"
