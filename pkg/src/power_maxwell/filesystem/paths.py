"""Path helpers"""

import logging
import os
import pathlib
from typing import Union

from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.filesystem.literals import Literals as FileSystemLiterals

literals = LiteralsCore([FileSystemLiterals])


def is_valid_path(path: Union[str, None] = None, check_existence: bool = False) -> bool:
    """Checks if it is a valid path.

    Args:
        path: Path string to be analyzed.
        check_existence: If True, it checks that the path exists.

    Returns:
        True if path is valid and, when asked, exists.
    """

    if path is None or str(path).strip() == "":
        logging.info(literals.get("fs_file_path_not_valid"))
        return False

    if check_existence and not os.path.exists(path):
        logging.info(literals.get("fs_file_path_does_not_exist", path=path))
        return False

    return True


def ensure_dir(path: Union[str, pathlib.Path]) -> pathlib.Path:
    """Creates the directory (and parents) when missing.

    Raises:
        NotADirectoryError: path exists and is a file.
    """

    directory = pathlib.Path(path)
    if directory.exists() and not directory.is_dir():
        raise NotADirectoryError(literals.get("fs_not_dir", path=directory))
    directory.mkdir(parents=True, exist_ok=True)
    return directory
