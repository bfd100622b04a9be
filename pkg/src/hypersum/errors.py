"""Exception types shared by every module."""

from __future__ import annotations


class HypersumError(Exception):
    """Base class for all library errors."""


class DegenerateParameter(HypersumError, ValueError):
    """A denominator Pochhammer symbol (or closed-form denominator) vanishes.

    ``locus`` names where it happened, e.g. ``{"side": "lhs", "k": 3}``.
    """

    def __init__(self, message: str, **locus):
        super().__init__(message)
        self.locus = locus

    def __str__(self):
        base = super().__str__()
        if not self.locus:
            return base
        where = ", ".join(f"{k}={v}" for k, v in self.locus.items())
        return f"{base} ({where})"


class OrderMismatch(HypersumError, ValueError):
    """Arithmetic attempted between truncated series of different orders."""


class ProvisoViolated(HypersumError, ValueError):
    """An explicit side condition of an identity does not hold."""
