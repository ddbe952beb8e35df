"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: validation failures exit with 2,
precondition (verified-hypothesis) failures with 3.
"""

from __future__ import annotations


class SchurCertError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(SchurCertError):
    """Malformed input: bad partition, wrong grade, dimension mismatch, ..."""


class ScenarioError(ValidationError):
    """Scenario file rejected; carries a line/column diagnostic."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PreconditionError(SchurCertError):
    """A mathematically required hypothesis failed its (exact) check."""


class HypothesisError(PreconditionError):
    """Hypothesis failure that carries the offending inertia triple."""

    def __init__(self, message: str, inertia=None):
        if inertia is not None:
            message = f"{message} (inertia={inertia})"
        super().__init__(message)
        self.inertia = inertia
