"""Exception types shared across the package."""


class QBoundsError(Exception):
    """Base class for all library errors."""


class ParameterError(QBoundsError, ValueError):
    """An argument lies outside an operation's domain."""


class ParseError(QBoundsError, ValueError):
    """A code file or string could not be parsed."""


class StructureError(QBoundsError, ValueError):
    """An input code lacks required structure (e.g. self-orthogonality)."""


class CapacityError(QBoundsError, RuntimeError):
    """A request exceeds the exhaustive-enumeration or solver size caps."""


class InvariantError(QBoundsError, RuntimeError):
    """An internal exact identity failed; indicates a bug, never a valid result."""


class SolverError(QBoundsError, RuntimeError):
    """A numeric solve failed (target not bracketed or no convergence)."""
