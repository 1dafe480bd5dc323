"""Exceptions shared across the package.

Every error carries a ``payload()`` dict so the command line tool can emit
machine-readable error objects with a stable shape.
"""

from __future__ import annotations


class RsytError(Exception):
    """Base class for all validation and domain errors."""

    def payload(self) -> dict:
        return {"type": type(self).__name__, "detail": str(self)}


class NotABijection(RsytError):
    """Tableau entries are not a bijection onto 1..N."""


class NotIncreasing(RsytError):
    """A row or column of a tableau fails to increase strictly.

    ``kind`` is "row" or "col" and ``cell`` is the 1-based (row, col) where
    the first violation occurs in row-major scan order.
    """

    def __init__(self, kind: str, cell: tuple[int, int]):
        self.kind = kind
        self.cell = cell
        super().__init__(f"not increasing along {kind} at cell {cell}")

    def payload(self) -> dict:
        return {
            "type": "NotIncreasing",
            "kind": self.kind,
            "cell": list(self.cell),
        }


class CapExceeded(RsytError):
    """A size cap guards this operation and the input exceeds it."""

    def __init__(self, needed: int, cap: int, what: str = "cells"):
        self.needed = needed
        self.cap = cap
        self.what = what
        super().__init__(f"{what}={needed} exceeds cap {cap}")

    def payload(self) -> dict:
        return {"type": "CapExceeded", "needed": self.needed, "cap": self.cap,
                "what": self.what}


class NotGeneric(RsytError):
    """An input vector pair or point set violates a genericity requirement.

    ``colliding`` names one offending pair (cells, points, or derived values)
    when available.
    """

    def __init__(self, message: str, colliding=None):
        self.colliding = colliding
        super().__init__(message)

    def payload(self) -> dict:
        out = {"type": "NotGeneric", "detail": str(self)}
        if self.colliding is not None:
            out["colliding"] = [list(c) if isinstance(c, tuple) else c
                                for c in self.colliding]
        return out


class DimensionMismatch(RsytError):
    """Two arguments describe objects of different dimensions."""


class InvalidTableau(RsytError):
    """A tableau argument failed validation."""


class NotRealizableError(RsytError):
    """An operation requires a realizable tableau and the input is not."""


class EmptySlice(RsytError):
    """No permutation attains the requested prefix sum."""


class FaceMissesHyperplane(RsytError):
    """The prefix-sum hyperplane does not meet the requested face."""


class BadInput(RsytError):
    """Malformed serialized input."""
