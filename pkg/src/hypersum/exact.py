"""Rational scalars and the combinatorial primitives built on them.

``fractions.Fraction`` already keeps numerator and denominator in lowest terms
with a positive denominator, so it serves as the exact scalar throughout.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from typing import Iterable, Union

from .errors import DegenerateParameter

Rational = Fraction
RationalLike = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def Q(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats and decimal strings are refused: they would smuggle rounding in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not an exact rational in p/q form: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(x))


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer index must be non-negative")
    a = Q(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
        if not result:
            return result
    return result


def pochhammer_product(params: Iterable[RationalLike], n: int) -> Fraction:
    result = Fraction(1)
    for a in params:
        result *= pochhammer(a, n)
    return result


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def first_vanishing_index(a: RationalLike, upto: int) -> int | None:
    """Smallest k <= upto with (a)_k == 0, or None if (a)_k != 0 throughout."""
    a = Q(a)
    if is_nonpositive_integer(a) and -a + 1 <= upto:
        return int(-a) + 1
    return None


class _StirlingTriangle:
    """Memoized rows of S(j, k), grown on demand under a lock."""

    def __init__(self):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def row(self, j: int) -> list[int]:
        rows = self._rows
        if j < len(rows):
            return rows[j]
        with self._lock:
            rows = list(self._rows)
            while len(rows) <= j:
                prev = rows[-1]
                n = len(rows)
                new = [0] * (n + 1)
                for k in range(1, n + 1):
                    left = prev[k] if k < len(prev) else 0
                    new[k] = k * left + prev[k - 1]
                rows.append(new)
            # publish the whole list at once so readers never see a partial row
            self._rows = rows
            return rows[j]


_stirling = _StirlingTriangle()


def stirling2(j: int, k: int) -> int:
    """Stirling number of the second kind S(j, k)."""
    if j < 0 or k < 0:
        raise ValueError("Stirling indices must be non-negative")
    if k > j:
        return 0
    return _stirling.row(j)[k]


def shifted_pochhammer_ratio(f: RationalLike, m: int, s: int) -> Fraction:
    """(f+m)_s / (f)_s, evaluated as (f+s)_m / (f)_m.

    Raises DegenerateParameter when (f)_m or (f)_s vanishes.
    """
    f = Q(f)
    if m < 1:
        raise ValueError("shift m must be a positive integer")
    if s < 0:
        raise ValueError("index s must be non-negative")
    den = pochhammer(f, m)
    if not den:
        raise DegenerateParameter("(f)_m vanishes", f=format_rational(f), m=m)
    if not pochhammer(f, s):
        raise DegenerateParameter("(f)_s vanishes", f=format_rational(f), s=s)
    return pochhammer(f + s, m) / den
