"""Defines constants for the module."""

from enum import Enum


class ModelName(Enum):
    """Models registered in the goodness-of-fit pipeline."""

    POWER_MAXWELL = "PMaD"
    MAXWELL = "MaD"
