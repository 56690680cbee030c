"""Defines constants for the module."""

from enum import Enum

MIN_REPLICATIONS = 100
MAX_FAILURE_SHARE = 0.2
SIZE_SWEEP = (10, 20, 30, 50)
SWEEP_PARAMS = (0.75, 0.75)
SCENARIO_SIZE = 20
SCENARIO_PARAMS = ((0.5, 0.75), (0.5, 1.5), (1.5, 0.5), (2.5, 2.5))
ESTIMATE_COLUMNS = ("alpha_ml", "beta_ml", "mttf_ml", "r_t_ml", "h_t_ml", "alpha_bl", "beta_bl")
INTERVAL_COLUMNS = ("alpha_lower", "alpha_upper", "acl_alpha", "beta_lower", "beta_upper", "acl_beta")


class Scenario(Enum):
    """Which parameter grid a simulate run covers."""

    SIZES = "sizes"
    PARAMS = "params"
    SINGLE = "single"
