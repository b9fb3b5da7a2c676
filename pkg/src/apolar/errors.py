"""Exceptions shared across the toolkit."""

from __future__ import annotations


class ApolarError(ValueError):
    """Base class for toolkit errors."""


class ParseError(ApolarError):
    """Polynomial text that does not conform to the grammar.

    `position` is the 0-based offset into the input where parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DependentLeadingForms(ApolarError):
    """Leading forms of the dual generators are linearly dependent.

    `relation` holds a nonzero coefficient vector c with sum c_r * G_r[d_r] = 0.
    """

    def __init__(self, relation):
        self.relation = tuple(relation)
        super().__init__(
            "leading forms are linearly dependent; relation coefficients "
            + str([str(c) for c in self.relation])
        )


class SocleDegreeTooLarge(ApolarError):
    """Raised by the rank criterion, which is only valid for socle degree <= 4."""


class InvariantViolation(RuntimeError):
    """A mathematical identity the toolkit relies on failed to hold.

    This indicates a bug, never a property of the input.
    """
