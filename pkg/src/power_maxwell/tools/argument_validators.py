"""Contains argument validators"""

import argparse

import power_maxwell.filesystem.paths as paths
from power_maxwell.core.literals_core import LiteralsCore
from power_maxwell.tools.literals import Literals as ToolsLiterals

literals = LiteralsCore([ToolsLiterals])


class PathValidator(argparse.Action):
    """Validates that a path exists"""
    def __init__(self, option_strings, dest, nargs=None, **kwargs):
        super(PathValidator, self).__init__(option_strings, dest.replace("-", "_"), **kwargs)

    def __call__(self, parent_parser, namespace, values, option_string=None):
        if not paths.is_valid_path(values, check_existence=True):
            parent_parser.error(literals.get("val_path_argument_not_valid", argument=self.dest))
        setattr(namespace, self.dest, values)


class PositiveValidator(argparse.Action):
    """Validates a strictly positive real"""
    def __init__(self, option_strings, dest, nargs=None, **kwargs):
        super(PositiveValidator, self).__init__(option_strings, dest.replace("-", "_"), **kwargs)

    def __call__(self, parent_parser, namespace, values, option_string=None):
        try:
            value = float(values)
        except ValueError:
            value = float("nan")
        if not value > 0.0 or value == float("inf"):
            parent_parser.error(literals.get("val_positive_argument_not_valid", argument=self.dest, value=values))
        setattr(namespace, self.dest, value)


class ProbabilityValidator(argparse.Action):
    """Validates a level or probability in (0, 1)"""
    def __init__(self, option_strings, dest, nargs=None, **kwargs):
        super(ProbabilityValidator, self).__init__(option_strings, dest.replace("-", "_"), **kwargs)

    def __call__(self, parent_parser, namespace, values, option_string=None):
        try:
            value = float(values)
        except ValueError:
            value = float("nan")
        if not 0.0 < value < 1.0:
            parent_parser.error(literals.get("val_probability_argument_not_valid", argument=self.dest,
                                             value=values))
        setattr(namespace, self.dest, value)


def count_validator(minimum: int):
    """Builds an Action accepting integers of at least minimum (replications, sample size, workers)."""

    class CountValidator(argparse.Action):
        def __init__(self, option_strings, dest, nargs=None, **kwargs):
            super(CountValidator, self).__init__(option_strings, dest.replace("-", "_"), **kwargs)

        def __call__(self, parent_parser, namespace, values, option_string=None):
            try:
                value = int(values)
            except ValueError:
                value = minimum - 1
            if value < minimum:
                parent_parser.error(literals.get("val_count_argument_not_valid", argument=self.dest,
                                                 minimum=minimum, value=values))
            setattr(namespace, self.dest, value)

    return CountValidator
