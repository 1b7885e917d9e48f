"""
Error taxonomy for ReesType.

Every library failure is a `ReesTypeError`; the subclass decides the
exit code the command-line driver reports.
"""


class ReesTypeError(Exception):
    """Base class for all ReesType failures."""

    exit_code: int = 1


class ParseError(ReesTypeError):
    """Malformed ring file, polynomial text or command-line value."""

    exit_code = 2


class PreconditionError(ReesTypeError):
    """An operation was called on inputs outside its domain."""

    exit_code = 3


class DegreeCapExceeded(ReesTypeError):
    """A Gröbner computation produced a pair above the configured degree cap."""

    exit_code = 4

    def __init__(self, degree: int, cap: int) -> None:
        super().__init__(f"S-pair of degree {degree} exceeds the degree cap {cap}")
        self.degree = degree
        self.cap = cap
