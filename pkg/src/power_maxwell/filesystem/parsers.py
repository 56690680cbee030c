"""Parses data files"""

import logging
import math
import pathlib
import re
from typing import List, Union

from power_maxwell.core.exceptions import DataFormatError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.estimation.constants import MIN_SAMPLE_SIZE
from power_maxwell.estimation.dataset import DataSet
from power_maxwell.filesystem.constants import COMMENT_PREFIX
from power_maxwell.filesystem.literals import Literals as FileSystemLiterals

literals = LiteralsCore([FileSystemLiterals])

_SEPARATORS = re.compile(r"[,\s]+")


def parse_values(text: str) -> List[float]:
    """Positive reals separated by whitespace or commas, any number per line.

    Blank lines and lines starting with '#' are skipped; order is preserved.

    Raises:
        DataFormatError: a token is not a number or not positive, with its line number.
    """

    values = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        for token in (t for t in _SEPARATORS.split(stripped) if t):
            try:
                value = float(token)
            except ValueError:
                raise DataFormatError(literals.get("fs_token_not_number", line_number=line_number, token=token),
                                      line_number)
            if not value > 0.0 or math.isinf(value):
                raise DataFormatError(literals.get("fs_value_not_positive", line_number=line_number, value=token),
                                      line_number)
            values.append(value)
    return values


def ingest(path: Union[str, pathlib.Path], label: str = None) -> DataSet:
    """Reads a data file into a DataSet labelled with the file stem.

    Raises:
        FileNotFoundError: path does not exist.
        DataFormatError: the file cannot be parsed or holds too few observations.
    """

    path = pathlib.Path(path)
    logging.debug(literals.get("fs_reading_data", path=path))
    with open(path, "r") as data_file:
        values = parse_values(data_file.read())
    if len(values) < MIN_SAMPLE_SIZE:
        raise DataFormatError(literals.get("fs_too_few_values", path=path, n=len(values), minimum=MIN_SAMPLE_SIZE))
    logging.info(literals.get("fs_data_read", n=len(values), path=path))
    return DataSet(tuple(values), label or path.stem)
