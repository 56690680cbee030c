"""Unit tests for the script_common file"""

import json
import pathlib

import pytest

import power_maxwell.scripts.script_common as sut
from power_maxwell.core.exceptions import (ConvergenceError, DataFormatError, ParameterDomainError,
                                           StudyAbortedError, UsageError)
from power_maxwell.distribution.params import Params
from power_maxwell.filesystem.constants import FileNames
from power_maxwell.scripts.constants import EXIT_FAILURE, EXIT_USAGE, Command

# region RunManifest


@pytest.mark.parametrize("command", [Command.FIT, Command.GOF])
def test_run_manifest_given_data_command_without_input_then_raises(command, tmp_path):
    """Given fit or gof without a data file, then raises UsageError"""

    with pytest.raises(UsageError):
        sut.RunManifest(command=command, output_dir=tmp_path)


def test_run_manifest_given_properties_without_params_then_raises(tmp_path):
    """Given properties without a parameter pair, then raises UsageError"""

    with pytest.raises(UsageError):
        sut.RunManifest(command=Command.PROPERTIES, output_dir=tmp_path)


def test_run_manifest_flag_given_missing_or_none_then_returns_default(tmp_path):
    """Given a flag that is absent or None, then returns the default"""

    # Arrange
    manifest = sut.RunManifest(command=Command.TABLE, output_dir=tmp_path, flags={"seed": None, "reps": 200})
    # Act / Assert
    assert manifest.flag("seed", 7) == 7
    assert manifest.flag("workers", 1) == 1
    assert manifest.flag("reps", 100) == 200

# endregion

# region write_report(manifest, results)


def test_write_report_given_results_then_writes_manifest_results_and_errata(tmp_path):
    """Given results, then report.json holds the manifest, the results and the errata ledger"""

    # Arrange
    manifest = sut.RunManifest(command=Command.PROPERTIES, output_dir=tmp_path, params=Params(1.0, 1.0))
    # Act
    path = sut.write_report(manifest, {"median": 1.0})
    # Assert
    assert path == pathlib.Path(tmp_path, FileNames.REPORT)
    with open(path, "r") as report_file:
        report = json.load(report_file)
    assert report["manifest"]["command"] == "properties"
    assert report["manifest"]["output_dir"] == str(tmp_path)
    assert report["results"] == {"median": 1.0}
    assert len(report["errata"]) > 0

# endregion

# region exit_code_for(error) / error_object(error) / report_error(error)


@pytest.mark.parametrize("error, expected", [
    (UsageError("usage"), EXIT_USAGE),
    (DataFormatError("format", 3), EXIT_USAGE),
    (FileNotFoundError("missing"), EXIT_USAGE),
    (ConvergenceError("no maximum"), EXIT_FAILURE),
    (StudyAbortedError("too many failures"), EXIT_FAILURE),
    (ParameterDomainError("domain"), EXIT_FAILURE),
    (RuntimeError("boom"), EXIT_FAILURE),
])
def test_exit_code_for_given_error_then_maps_category(error, expected):
    """Given an error, then returns 2 for usage and input errors and 1 otherwise"""

    assert sut.exit_code_for(error) == expected


def test_error_object_given_error_then_returns_type_and_message():
    """Given an error, then returns its class name and message"""

    assert sut.error_object(ConvergenceError("no maximum")) == {
        "error": {"type": "ConvergenceError", "message": "no maximum"}}


def test_report_error_given_error_then_prints_json_to_stderr(capsys):
    """Given an error, then prints its JSON object to stderr and returns the exit code"""

    # Act
    result = sut.report_error(UsageError("usage"))
    # Assert
    assert result == EXIT_USAGE
    assert json.loads(capsys.readouterr().err.splitlines()[-1]) == {
        "error": {"type": "UsageError", "message": "usage"}}

# endregion
