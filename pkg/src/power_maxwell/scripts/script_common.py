""" Here we must place the common methods that are used in more than one command """

import json
import logging
import pathlib
import sys
from dataclasses import dataclass, field
from typing import Optional

import power_maxwell.filesystem.writers as writers
from power_maxwell.core.app import App
from power_maxwell.core.exceptions import DataFormatError, PowerMaxwellError, UsageError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.params import Params
from power_maxwell.filesystem.constants import FileNames
from power_maxwell.reference.errata import errata_records
from power_maxwell.scripts.constants import EXIT_FAILURE, EXIT_USAGE, Command
from power_maxwell.scripts.literals import Literals as ScriptsLiterals

app: App = App()
literals = LiteralsCore([ScriptsLiterals])

_USAGE_ERRORS = (DataFormatError, UsageError, FileNotFoundError, NotADirectoryError)


@dataclass(frozen=True)
class RunManifest:
    """Everything a command needs, written verbatim into its report.

    Attributes:
        command: The sub-command.
        output_dir: Directory receiving report.json and the tables.
        input_path: Data file, required by fit and gof.
        params: Parameter pair, required by properties.
        flags: The remaining parsed options.
    """

    command: Command
    output_dir: pathlib.Path
    input_path: Optional[pathlib.Path] = None
    params: Optional[Params] = None
    flags: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command in (Command.FIT, Command.GOF) and self.input_path is None:
            raise UsageError(literals.get("pmad_input_required", command=self.command.value))
        if self.command is Command.PROPERTIES and self.params is None:
            raise UsageError(literals.get("pmad_params_required", command=self.command.value))

    def flag(self, name: str, default=None):
        value = self.flags.get(name)
        return default if value is None else value

    def output_path(self, file_name: str) -> pathlib.Path:
        return self.output_dir / file_name

    def as_dict(self) -> dict:
        return {"command": self.command.value, "input_path": self.input_path,
                "params": None if self.params is None else self.params.as_dict(), "flags": dict(self.flags),
                "output_dir": self.output_dir}


def write_report(manifest: RunManifest, results: dict) -> pathlib.Path:
    """Writes report.json with the manifest, the results and the errata ledger."""

    path = manifest.output_path(FileNames.REPORT)
    writers.write_json(path, {"manifest": manifest.as_dict(), "results": results, "errata": errata_records()})
    return path


def exit_code_for(error: BaseException) -> int:
    """2 for usage and input errors, 1 for everything else."""

    return EXIT_USAGE if isinstance(error, _USAGE_ERRORS) else EXIT_FAILURE


def error_object(error: BaseException) -> dict:
    """Machine-readable error written to stderr by a failing command."""

    return {"error": {"type": type(error).__name__, "message": str(error)}}


def report_error(error: BaseException) -> int:
    """Logs the error, prints its JSON object to stderr and returns the exit code."""

    if isinstance(error, (PowerMaxwellError,) + _USAGE_ERRORS):
        logging.error(str(error))
    else:
        logging.exception(literals.get("core_unexpected_error", error=error))
    print(json.dumps(error_object(error)), file=sys.stderr)
    return exit_code_for(error)
