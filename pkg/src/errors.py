# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0


class TwistedDescentError(ValueError):
    """Base class for all errors raised by the twisted descent toolkit."""


class LiteralParseError(TwistedDescentError):
    """A text literal (set composition, permutation or tree) could not be parsed."""


class DomainError(TwistedDescentError):
    """An operation was called outside of its precondition."""


class BasisKindMismatchError(DomainError):
    """Linear arithmetic was attempted across different basis kinds."""
