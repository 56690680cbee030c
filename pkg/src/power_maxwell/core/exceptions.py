"""Exception hierarchy of the package.

Messages are resolved from the literals of the raising module; these classes
only carry the category the CLI maps to an exit code.
"""


class PowerMaxwellError(Exception):
    """Base class for every error raised by power_maxwell."""


class ParameterDomainError(PowerMaxwellError, ValueError):
    """An argument lies outside the domain of the operation."""


class DivergenceError(PowerMaxwellError, ArithmeticError):
    """An integral or generating function does not converge for the given arguments."""


class DegenerateDistributionError(PowerMaxwellError, ArithmeticError):
    """A ratio needs a survival or distribution value that underflowed to zero."""


class ConvergenceError(PowerMaxwellError, ArithmeticError):
    """An iterative solver stopped without meeting its tolerance."""


class SingularInformationError(PowerMaxwellError, ArithmeticError):
    """The observed information matrix cannot be inverted."""


class BoxEscapeError(PowerMaxwellError, ArithmeticError):
    """Too much posterior mass lies outside the integration box."""


class StudyAbortedError(PowerMaxwellError):
    """A Monte-Carlo study exceeded its allowed share of failed replications."""


class DataFormatError(PowerMaxwellError, ValueError):
    """A data file cannot be parsed.

    Attributes:
        line_number: 1-based line of the offending token, None when unknown.
    """

    def __init__(self, message: str, line_number: int = None):
        super().__init__(message)
        self.line_number = line_number


class UsageError(PowerMaxwellError, ValueError):
    """A command was invoked without the inputs it needs."""
