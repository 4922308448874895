"""Typed errors shared across the package.

A budget miss must never degrade into a wrong number, so resource errors
carry whatever exact bounds were established before the budget ran out.
"""

from __future__ import annotations


class InvalidInputError(ValueError):
    """Labels out of range, malformed edges, broken invariants."""


class SizeError(InvalidInputError):
    """Polygon too small for the requested operation."""


class FlipSequenceError(InvalidInputError):
    """A listed edge was not flippable when its turn came."""

    def __init__(self, index: int, edge: tuple[int, int], message: str | None = None):
        self.index = index
        self.edge = edge
        super().__init__(message or f"edge {edge} not flippable at step {index}")


class ResourceBudgetError(RuntimeError):
    """Computation exceeded its configured state budget.

    ``lower`` and ``upper`` bracket the true value when the computation is a
    distance query; both are None for enumeration-style work.
    """

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        self.lower = lower
        self.upper = upper
        super().__init__(message)
