"""Exception types shared across the package.

The CLI maps these onto exit codes: I/O and parse problems exit 1,
usage errors exit 2, resource caps exit 3.
"""


class PolyadicError(Exception):
    """Base class for all package errors."""


class BoundsError(PolyadicError, IndexError):
    """A node id or relation index lies outside the structure."""


class RelationError(PolyadicError, ValueError):
    """A relation violates the contract of the structure being built."""


class ResourceLimitError(PolyadicError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds cap of {cap}")
        self.what = what
        self.cap = cap


class ParseError(PolyadicError, ValueError):
    """Malformed input file; the message names the offending line."""
