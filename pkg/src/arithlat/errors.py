"""Exception hierarchy.

Input problems (wrong sizes, malformed vectors) and mathematical findings
(a divisibility condition that does not hold) are kept in separate branches
so callers can tell a bad request from a falsified claim.
"""

from __future__ import annotations


class ArithError(Exception):
    """Base class for every error raised by arithlat."""


# -- malformed input -------------------------------------------------------

class InputError(ArithError, ValueError):
    """The request itself is malformed."""


class InvalidSizeError(InputError):
    pass


class DimensionError(InputError):
    pass


class DomainError(InputError):
    """A vector entry lies outside its allowed range (e.g. r_v <= 0)."""


class InvalidPermutationError(InputError):
    pass


class FamilyError(InputError):
    """Operation not defined for the supplied graph family."""


class UniquenessError(InputError):
    pass


class SizeCapError(InputError):
    """A documented hard limit on problem size would be exceeded."""


class EnumerationCapError(SizeCapError):
    pass


# -- mathematical findings -------------------------------------------------

class FindingError(ArithError):
    """The mathematics said no: the input is well formed but a condition fails."""


class DivisibilityError(FindingError):
    """Some vertex has r_v not dividing the sum of its neighbours' r values.

    ``vertices`` holds the 0-based indices of every offending vertex.
    """

    def __init__(self, vertices, message=None):
        self.vertices = tuple(vertices)
        if message is None:
            message = f"divisibility fails at vertices {list(self.vertices)}"
        super().__init__(message)


class LiftError(DivisibilityError):
    """A walk of column states does not lift to an arithmetical structure."""


class PositivityError(FindingError):
    def __init__(self, vertices, message=None):
        self.vertices = tuple(vertices)
        if message is None:
            message = f"non-positive entries at {list(self.vertices)}"
        super().__init__(message)


class PrimitivityError(FindingError):
    pass


class SymmetryError(FindingError):
    pass


class InvariantError(FindingError):
    """A sequence violates its stated divisibility invariant."""

    def __init__(self, index, row, message=None):
        self.index = index
        self.row = row
        if message is None:
            message = f"divisibility invariant fails at i={index} in row {row}"
        super().__init__(message)


class CorollaryViolation(FindingError):
    pass
