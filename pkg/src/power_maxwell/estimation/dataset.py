"""Samples of positive observations"""

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from power_maxwell.core.exceptions import ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.estimation.constants import MIN_SAMPLE_SIZE
from power_maxwell.estimation.literals import Literals as EstimationLiterals

literals = LiteralsCore([EstimationLiterals])


@dataclass(frozen=True)
class DataSet:
    """Ordered sample of positive reals.

    Attributes:
        values: The observations, in input order.
        label: Name shown in reports.
    """

    values: Tuple[float, ...]
    label: str = "data"

    def __post_init__(self):
        for value in self.values:
            if not value > 0.0 or math.isinf(value):
                raise ParameterDomainError(literals.get("est_data_not_positive", value=value))
        if len(self.values) < MIN_SAMPLE_SIZE:
            raise ParameterDomainError(literals.get("est_data_too_short", minimum=MIN_SAMPLE_SIZE,
                                                    n=len(self.values)))

    @classmethod
    def of(cls, values: Iterable[float], label: str = "data") -> "DataSet":
        return cls(tuple(float(v) for v in values), label)

    @property
    def n(self) -> int:
        return len(self.values)

    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def log_array(self) -> np.ndarray:
        return np.log(self.array())

    def scaled(self, factor: float) -> "DataSet":
        """Every observation multiplied by factor."""

        if not factor > 0.0:
            raise ParameterDomainError(literals.get("est_scale_factor", factor=factor))
        return DataSet(tuple(v * factor for v in self.values), self.label)
