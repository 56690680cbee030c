"""Writes JSON reports and CSV tables.

Numbers are written with 10 significant digits; non-finite numbers become null
in JSON and empty cells in CSV.
"""

import json
import logging
import math
import pathlib
from enum import Enum
from typing import Any, Union

import numpy as np
import pandas as pd

from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.filesystem.constants import SIGNIFICANT_DIGITS
from power_maxwell.filesystem.literals import Literals as FileSystemLiterals

literals = LiteralsCore([FileSystemLiterals])

_FLOAT_FORMAT = "%.{}g".format(SIGNIFICANT_DIGITS)


def round_significant(value: float) -> Union[float, None]:
    """value rounded to 10 significant digits, None when not finite."""

    if not math.isfinite(value):
        return None
    return float(_FLOAT_FORMAT % value)


def to_serializable(data: Any) -> Any:
    """Recursively converts numpy scalars, arrays, tuples and enums into JSON types."""

    if isinstance(data, dict):
        return {str(key): to_serializable(value) for key, value in data.items()}
    if isinstance(data, (list, tuple, np.ndarray)):
        return [to_serializable(value) for value in data]
    if isinstance(data, Enum):
        return data.value
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (int, np.integer)):
        return int(data)
    if isinstance(data, (float, np.floating)):
        return round_significant(float(data))
    if isinstance(data, pathlib.PurePath):
        return str(data)
    return data


def write_json(path: Union[str, pathlib.Path], data: dict):
    logging.info(literals.get("fs_writing_file", path=path))
    with open(path, "w") as json_file:
        json.dump(to_serializable(data), json_file, indent=2)


def write_frame(path: Union[str, pathlib.Path], frame: pd.DataFrame):
    """Writes a table as CSV without the index."""

    logging.info(literals.get("fs_writing_file", path=path))
    frame.replace([np.inf, -np.inf], np.nan).to_csv(path, index=False, float_format=_FLOAT_FORMAT)
