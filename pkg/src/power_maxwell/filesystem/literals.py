"""filesystem module literals"""

from power_maxwell.core.value_dicts_base import ValueDictsBase
from power_maxwell.core.app import App

app: App = App()


class Literals(ValueDictsBase):
    """ValueDicts for the filesystem module."""

    _info = {
        "fs_reading_data": _("Reading observations from \"{path}\""),
        "fs_data_read": _("Read {n} observations from \"{path}\""),
        "fs_writing_file": _("Writing file \"{path}\""),
        "fs_file_path_not_valid": _("File path is not valid."),
        "fs_file_path_does_not_exist": _("File path does not exist: {path}"),
    }
    _errors = {
        "fs_not_dir": _("Path must be a dir, not a file: {path}"),
        "fs_token_not_number": _("Line {line_number}: \"{token}\" is not a number."),
        "fs_value_not_positive": _("Line {line_number}: observation {value} is not positive."),
        "fs_too_few_values": _("\"{path}\" holds {n} observations; at least {minimum} are needed."),
    }
