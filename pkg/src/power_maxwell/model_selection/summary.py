"""Descriptive summary of a sample"""

import logging
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np
from scipy import stats

from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.estimation.dataset import DataSet
from power_maxwell.model_selection.literals import Literals as ModelSelectionLiterals

literals = LiteralsCore([ModelSelectionLiterals])


@dataclass(frozen=True)
class SampleSummary:
    """Five-number summary plus mean and moment shape measures.

    Quartiles interpolate linearly between order statistics. skewness is the
    moment coefficient g1; kurtosis is the raw fourth standardized moment and
    excess_kurtosis the same minus 3. Shape measures are None for constant data.
    """

    min: float
    q1: float
    median: float
    mean: float
    q3: float
    max: float
    kurtosis: Optional[float]
    skewness: Optional[float]
    excess_kurtosis: Optional[float]

    def as_dict(self) -> dict:
        return asdict(self)


def summarize(d: DataSet) -> SampleSummary:
    values = d.array()
    q1, median, q3 = np.quantile(values, [0.25, 0.5, 0.75], method="linear")
    if float(np.ptp(values)) == 0.0:
        logging.info(literals.get("ms_skewness_undefined"))
        skewness = kurtosis = excess = None
    else:
        skewness = float(stats.skew(values, bias=True))
        kurtosis = float(stats.kurtosis(values, fisher=False, bias=True))
        excess = kurtosis - 3.0
        logging.debug(literals.get("ms_kurtosis_convention", raw=kurtosis, excess=excess))
    return SampleSummary(min=float(values.min()), q1=float(q1), median=float(median), mean=float(values.mean()),
                         q3=float(q3), max=float(values.max()), kurtosis=kurtosis, skewness=skewness,
                         excess_kurtosis=excess)
