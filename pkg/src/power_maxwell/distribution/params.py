"""Parameter pair of one distribution member"""

import math
from dataclasses import dataclass

from power_maxwell.core.exceptions import ParameterDomainError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.literals import Literals as DistributionLiterals

literals = LiteralsCore([DistributionLiterals])


@dataclass(frozen=True)
class Params:
    """Scale alpha and shape beta, both strictly positive.

    Attributes:
        alpha: Scale parameter.
        beta: Shape (power) parameter.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.beta > 0.0) or math.isinf(self.alpha) or math.isinf(self.beta):
            raise ParameterDomainError(literals.get("dist_params_not_positive", alpha=self.alpha, beta=self.beta))

    def rescaled(self, factor: float) -> "Params":
        """Parameters of c*X when X has these parameters (scale family law)."""

        if not factor > 0.0:
            raise ParameterDomainError(literals.get("dist_x_not_positive", x=factor))
        return Params(self.alpha * factor ** (-2.0 * self.beta), self.beta)

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta}
