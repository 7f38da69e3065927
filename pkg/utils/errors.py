"""
Workbench Errors
Exception hierarchy shared by every package of the workbench
"""


class WorkbenchError(Exception):
    """Base class for errors the CLI reports as machine-readable JSON"""


class DomainError(WorkbenchError, ValueError):
    """An argument lies outside the domain where the operation is defined"""


class RangeOverflowError(DomainError, OverflowError):
    """An integer bound exceeds the supported 2**63 range"""


class ZeroTableError(WorkbenchError, ValueError):
    """A zero table could not be parsed, is malformed, or is too short"""


class ConfigError(WorkbenchError, ValueError):
    """Invalid experiment configuration"""


class ConvergenceError(WorkbenchError, RuntimeError):
    """Numerical procedure failed to reach its tolerance"""

    def __init__(self, message, partial=None, error_estimate=None):
        """
        Initialize convergence error

        Args:
            message (str): Human readable description
            partial: Best estimate available when the procedure stopped
            error_estimate (float): Estimated absolute error of ``partial``
        """
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate


MAX_INT = 2 ** 63


def check_int_range(*values):
    """Raise RangeOverflowError if any bound exceeds 2**63"""
    for value in values:
        if value > MAX_INT:
            raise RangeOverflowError(f"bound {value} exceeds 2**63")
