class InvalidInputError(ValueError):
    """Raised for arguments outside an operation's domain (CLI exit code 2)."""


class InvariantViolationError(RuntimeError):
    """Raised when an internal consistency check fails.

    These checks guard the conventions the calculators depend on (solvability
    of the periodic-domain system, anti-symmetry of normalized gradings).
    A violation is a bug, not bad input, so it aborts with a diagnostic.
    """
