"""Exception types shared across the package.

Every domain error names the violated invariant and carries a witness, so
reports and the CLI can surface exactly what failed and on which value.
"""

from __future__ import annotations


class InvariantViolation(Exception):
    """Base class for domain errors (bad input, unsatisfiable precondition)."""

    def __init__(self, invariant: str, witness=None, detail: str | None = None):
        self.invariant = invariant
        self.witness = witness
        msg = invariant
        if witness is not None:
            msg += f": witness {witness!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ValidationError(InvariantViolation):
    """Malformed or inconsistent problem input."""


class NotDecomposable(InvariantViolation):
    """A multiset is not a sum of fixed-length unit-step runs.

    ``witness`` is the first missing exponent encountered by the greedy scan.
    """

    def __init__(self, witness, detail: str | None = None):
        super().__init__("not decomposable into fixed-length segments", witness, detail)


class NotInImage(InvariantViolation):
    """A split-side object is not a transfer of any inner-side object."""

    def __init__(self, label_name: str, witness=None):
        self.label_name = label_name
        super().__init__("not in the image of the transfer", witness,
                         detail=f"label {label_name}")


class EnumerationBoundExceeded(InvariantViolation):
    """The requested enumeration is larger than the configured size bound."""

    def __init__(self, size: int, bound: int):
        super().__init__("enumeration size bound exceeded", size,
                         detail=f"bound {bound}")


class InternalConsistencyError(RuntimeError):
    """A theorem-guaranteed condition failed; indicates a bug, not bad input."""
