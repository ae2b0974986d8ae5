"""Exception types raised by electdist.

Everything raised on purpose derives from :class:`ElectdistError`, so callers
(and the CLI) can catch one base class.  Arithmetic overflow in the assignment
solver uses the builtin :class:`OverflowError` instead, since that is exactly
what it is.
"""

from __future__ import annotations


class ElectdistError(Exception):
    """Base class for all electdist errors."""


class ValidationError(ElectdistError):
    """A value violates a structural invariant."""


class NotAPermutation(ValidationError):
    """A vote is not a permutation of the candidate set.

    ``vote_index`` is the 0-based index of the offending vote, or None when
    the order was validated on its own.
    """

    def __init__(self, message: str, vote_index: int | None = None):
        super().__init__(message)
        self.vote_index = vote_index


class VoteLengthMismatch(ValidationError):
    """A vote ranks a different number of candidates than the election."""

    def __init__(self, message: str, vote_index: int | None = None):
        super().__init__(message)
        self.vote_index = vote_index


class SizeMismatch(ElectdistError):
    """Two objects that must agree on dimensions do not."""


class HeterogeneousSizes(SizeMismatch):
    """A batch of elections does not share a single (m, n) shape."""


class CapExceeded(ElectdistError):
    """An instance exceeds a configured size cap for this solver.

    Caps are configuration, not hard limits; every capped entry point takes a
    keyword argument to raise its cap explicitly.
    """


class BudgetTooLargeForSearch(CapExceeded):
    """The swap-budget search was asked to explore a budget over its cap."""


class DomainTooLarge(ElectdistError):
    """A vote domain would be too large to materialize."""


class EmptyDomain(ElectdistError):
    """An operation needs a non-empty domain."""


class ParseError(ElectdistError):
    """Malformed input text.

    ``line`` is the 1-based line number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IncompleteOrder(ParseError):
    """A data line does not rank every alternative exactly once."""


class UnsupportedFormat(ParseError):
    """The input is recognized but uses a feature this reader rejects."""
