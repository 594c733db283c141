"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: domain/hypothesis errors exit 1,
input/parse errors exit 2, capacity errors exit 3.
"""


class AllianceError(Exception):
    """Base class for all errors raised by the package."""


class InputError(AllianceError, ValueError):
    """Malformed argument: out-of-range vertex, empty set, bad parameters."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(AllianceError):
    """The quantity is undefined on this input (e.g. diameter of a disconnected graph)."""


class HypothesisError(DomainError):
    """A construction was requested on a graph that violates its hypothesis."""


class ModeError(InputError):
    """Incompatible combination of options."""


class CapacityError(AllianceError):
    """Input exceeds the exact-search size guard."""


class GenerationError(AllianceError):
    """A randomized generator exhausted its retry budget."""
