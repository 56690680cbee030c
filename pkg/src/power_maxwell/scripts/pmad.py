""" Command-line entry point: pmad {fit,simulate,properties,gof,table} [options]

Exit codes: 0 success, 1 computational failure, 2 usage or input error. A
failing command writes {"error": {"type", "message"}} to stderr.
"""

import argparse
import logging
import pathlib
import sys
from typing import Callable, Dict, List, Optional

import power_maxwell.core.log_setup as log_setup
import power_maxwell.core.log_tools as log_tools
import power_maxwell.filesystem.paths as paths
import power_maxwell.tools.cli as cli
from power_maxwell.core.app import App
from power_maxwell.core.exceptions import UsageError
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.distribution.params import Params
from power_maxwell.model_selection.gof import MODELS
from power_maxwell.scripts import fit, gof, properties, simulate, table
from power_maxwell.scripts.constants import LOG_FILE_NAME, Command
from power_maxwell.scripts.literals import Literals as ScriptsLiterals
from power_maxwell.scripts.script_common import RunManifest, report_error
from power_maxwell.simulation.constants import Scenario
from power_maxwell.tools.argument_validators import (PathValidator, PositiveValidator, ProbabilityValidator,
                                                     count_validator)

app: App = App()
literals = LiteralsCore([ScriptsLiterals])

COMMANDS: Dict[Command, Callable[[RunManifest], int]] = {
    Command.FIT: fit.main,
    Command.SIMULATE: simulate.main,
    Command.PROPERTIES: properties.main,
    Command.GOF: gof.main,
    Command.TABLE: table.main,
}

_MANIFEST_KEYS = ("command", "input", "alpha", "beta", "out")


def _add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--out", default=app.settings.output_dir, help=literals.get("pmad_help_out"))
    parser.add_argument("--quiet", action="store_true", help=literals.get("pmad_help_quiet"))
    parser.add_argument("--level", action=ProbabilityValidator, default=app.settings.level,
                        help=literals.get("pmad_help_level"))
    parser.add_argument("--t-eval", dest="t_eval", action=PositiveValidator, default=app.settings.t_eval,
                        help=literals.get("pmad_help_t_eval"))


def _add_params_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--alpha", action=PositiveValidator, help=literals.get("pmad_help_alpha"))
    parser.add_argument("--beta", action=PositiveValidator, help=literals.get("pmad_help_beta"))


class PmadArgumentParser(argparse.ArgumentParser):
    """Raises UsageError on an invalid command line instead of exiting."""

    def error(self, message: str):
        raise UsageError(literals.get("pmad_usage_error", usage=self.format_usage().strip(), message=message))


def build_parser() -> argparse.ArgumentParser:
    parser = PmadArgumentParser(prog="pmad", description=literals.get("pmad_description"))
    subparsers = parser.add_subparsers(dest="command", required=True)

    fit_parser = subparsers.add_parser(Command.FIT.value)
    fit_parser.add_argument("input", action=PathValidator, help=literals.get("pmad_help_input"))
    fit_parser.add_argument("--bayes", action="store_true", help=literals.get("pmad_help_bayes"))
    fit_parser.add_argument("--prior-variance", dest="prior_variance", action=PositiveValidator,
                            default=app.settings.prior_variance, help=literals.get("pmad_help_prior_variance"))
    _add_common_arguments(fit_parser)

    simulate_parser = subparsers.add_parser(Command.SIMULATE.value)
    _add_params_arguments(simulate_parser)
    simulate_parser.add_argument("--n", action=count_validator(3), help=literals.get("pmad_help_n"))
    simulate_parser.add_argument("--reps", action=count_validator(100), default=app.settings.replications,
                                 help=literals.get("pmad_help_reps"))
    simulate_parser.add_argument("--seed", type=int, default=app.settings.seed, help=literals.get("pmad_help_seed"))
    simulate_parser.add_argument("--prior-variance", dest="prior_variance", action=PositiveValidator,
                                 default=app.settings.prior_variance, help=literals.get("pmad_help_prior_variance"))
    simulate_parser.add_argument("--workers", action=count_validator(1), default=app.settings.workers,
                                 help=literals.get("pmad_help_workers"))
    simulate_parser.add_argument("--scenario", choices=[s.value for s in Scenario], default=Scenario.SIZES.value,
                                 help=literals.get("pmad_help_scenario"))
    _add_common_arguments(simulate_parser)

    properties_parser = subparsers.add_parser(Command.PROPERTIES.value)
    _add_params_arguments(properties_parser)
    _add_common_arguments(properties_parser)

    gof_parser = subparsers.add_parser(Command.GOF.value)
    gof_parser.add_argument("input", action=PathValidator, help=literals.get("pmad_help_input"))
    gof_parser.add_argument("--models", nargs="+", choices=list(MODELS), help=literals.get("pmad_help_models"))
    _add_common_arguments(gof_parser)

    table_parser = subparsers.add_parser(Command.TABLE.value)
    _add_common_arguments(table_parser)
    return parser


def manifest_from_args(args: argparse.Namespace) -> RunManifest:
    """Builds the manifest of a parsed command line.

    Raises:
        UsageError: only one of --alpha and --beta is given, or a required input is missing.
    """

    values = vars(args)
    alpha, beta = values.get("alpha"), values.get("beta")
    command = Command(args.command)
    if (alpha is None) != (beta is None):
        raise UsageError(literals.get("pmad_params_required", command=command.value))
    params = None if alpha is None else Params(alpha, beta)
    input_path = values.get("input")
    return RunManifest(command=command, output_dir=pathlib.Path(args.out),
                       input_path=None if input_path is None else pathlib.Path(input_path), params=params,
                       flags={key: value for key, value in values.items() if key not in _MANIFEST_KEYS})


def run(argv: Optional[List[str]] = None) -> int:
    """Parses argv, runs the command and returns its exit code."""

    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        return report_error(error)
    if args.quiet:
        log_setup.set_console_level(logging.WARNING)
    else:
        cli.print_title(literals.get("pmad_title"))
    log_tools.log_indented_list(literals.get("function_params"),
                                log_tools.get_parameter_value_list(vars(args)), log_tools.LogLevel.debug)

    file_handler = None
    try:
        manifest = manifest_from_args(args)
        output_dir = paths.ensure_dir(manifest.output_dir)
        file_handler = log_setup.add_run_file_handler(str(output_dir / LOG_FILE_NAME))
        logging.info(literals.get("pmad_command_started", command=manifest.command.value, output_dir=output_dir))
        code = COMMANDS[manifest.command](manifest)
    except Exception as error:
        code = report_error(error)
    finally:
        if file_handler is not None:
            logging.getLogger().removeHandler(file_handler)
            file_handler.close()
    logging.debug(literals.get("pmad_command_finished", command=args.command, code=code))
    return code


def entry_point():
    sys.exit(run())


if __name__ == "__main__":
    entry_point()
