"""Plot-ready tables for fitted-versus-empirical comparisons"""

from typing import Callable

import numpy as np
import pandas as pd

from power_maxwell.estimation.dataset import DataSet


def ecdf_frame(d: DataSet, model_cdf: Callable[[float], float]) -> pd.DataFrame:
    """Sorted observations with the empirical step value i/n and the fitted cdf."""

    xs = np.sort(d.array())
    n = xs.size
    return pd.DataFrame({"x": xs, "empirical": np.arange(1, n + 1) / n,
                         "fitted": [model_cdf(float(x)) for x in xs]})


def qq_frame(d: DataSet, model_quantile: Callable[[float], float]) -> pd.DataFrame:
    """Fitted quantiles at plotting positions (i - 0.5) / n against sorted observations."""

    xs = np.sort(d.array())
    n = xs.size
    positions = (np.arange(1, n + 1) - 0.5) / n
    return pd.DataFrame({"probability": positions, "theoretical": [model_quantile(float(u)) for u in positions],
                         "empirical": xs})
