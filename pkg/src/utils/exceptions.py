"""Custom exceptions for the regular-space max-flow solver"""

from typing import Optional, Dict, Any

import pydantic


class RegularFlowError(Exception):
    """Base exception for all solver errors"""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InputValidationError(RegularFlowError):
    """Raised when user supplied data is invalid"""

    pass


class InstanceParseError(InputValidationError):
    """Raised when an instance, DIMACS or trace file is malformed"""

    def __init__(
        self,
        message: str,
        line_number: Optional[int] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message, details)
        self.line_number = line_number


class EntryRangeError(InputValidationError):
    """Raised when a matrix entry lies outside {-1, 0, +1}"""

    pass


class DimensionMismatchError(InputValidationError):
    """Raised when vectors or matrices disagree in dimension"""

    pass


class NotInSpaceError(InputValidationError):
    """Raised when a vector is not a member of the regular space"""

    pass


class SizeGuardError(InputValidationError):
    """Raised when an exhaustive procedure exceeds its desk-scale limit"""

    pass


class OracleMismatchError(InputValidationError):
    """Raised when an oracle is used on an instance it cannot serve"""

    pass


class UnboundedProblemError(InputValidationError):
    """Raised when the max-flow objective is unbounded"""

    pass


class InvariantViolationError(RegularFlowError):
    """Raised when a theoretical guarantee fails at runtime"""

    exit_code = 2


class RegularityViolationError(InvariantViolationError):
    """Raised when an elementary vector does not scale to a {-1, 0, +1} vector"""

    def __init__(self, support: Any, values: Any = None):
        super().__init__(
            f"space is not regular: elementary vector on support {support} "
            f"does not scale to a primitive vector",
            {"support": support, "values": values},
        )
        self.support = support


class IterationGuardError(InvariantViolationError):
    """Raised when the augmentation count exceeds |E|^2"""

    pass


class PathAlgebraError(InvariantViolationError):
    """Raised when the meet/join construction does not yield exactly two r-paths"""

    pass


def exit_code_for(error: BaseException) -> int:
    """Map an exception onto the command-line exit status

    0 is never returned here; 1 marks user-side problems, 2 marks a breach
    of a theoretical invariant.
    """
    if isinstance(error, RegularFlowError):
        return error.exit_code
    if isinstance(error, (FileNotFoundError, IsADirectoryError, PermissionError)):
        return 1
    if isinstance(error, pydantic.ValidationError):
        return 1
    return 2
