"""Dense univariate polynomials with Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Q, RationalLike, format_rational


class RationalPolynomial:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``t**i``.

    Trailing zeros are stripped, so the zero polynomial has an empty
    coefficient tuple and ``degree`` is None for it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Q(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike) -> RationalPolynomial:
        return cls([c])

    @classmethod
    def variable(cls) -> RationalPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative power")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPolynomial({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return poly_to_text(self)

    def __add__(self, other):
        return poly_add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other):
        return poly_add(self, -_lift(other))

    def __rsub__(self, other):
        return poly_add(_lift(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)


def _lift(p) -> RationalPolynomial:
    if isinstance(p, RationalPolynomial):
        return p
    return RationalPolynomial([p])


def poly_add(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return RationalPolynomial(p[i] + q[i] for i in range(n))


def poly_scale(p: RationalPolynomial, s: RationalLike) -> RationalPolynomial:
    s = Q(s)
    return RationalPolynomial(c * s for c in p.coeffs)


def poly_mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    if p.is_zero() or q.is_zero():
        return RationalPolynomial()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return RationalPolynomial(out)


def poly_eval(p: RationalPolynomial, x: RationalLike) -> Fraction:
    """Horner evaluation."""
    x = Q(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_negate_variable(p: RationalPolynomial) -> RationalPolynomial:
    """p(t) -> p(-t)."""
    return RationalPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs))


def poly_shift_variable(p: RationalPolynomial, h: RationalLike) -> RationalPolynomial:
    """p(t) -> p(t + h)."""
    shift = RationalPolynomial([h, 1])
    acc = RationalPolynomial()
    for c in reversed(p.coeffs):
        acc = poly_add(poly_mul(acc, shift), RationalPolynomial([c]))
    return acc


def rising_factorial_poly(shift: RationalLike, m: int) -> RationalPolynomial:
    """(shift + x)_m = prod_{i<m} (x + shift + i) as a polynomial in x."""
    if m < 0:
        raise ValueError("m must be non-negative")
    shift = Q(shift)
    out = RationalPolynomial([1])
    for i in range(m):
        out = poly_mul(out, RationalPolynomial([shift + i, 1]))
    return out


def sigma_coefficients(f_list: Sequence[RationalLike], m_list: Sequence[int]) -> list[Fraction]:
    """Coefficients sigma_0..sigma_m of prod_j (f_j + x)_{m_j}, m = sum(m_list)."""
    if len(f_list) != len(m_list):
        raise ValueError("f_list and m_list must have equal length")
    prod = RationalPolynomial([1])
    for f, m in zip(f_list, m_list):
        prod = poly_mul(prod, rising_factorial_poly(f, m))
    total = sum(m_list)
    return [prod[j] for j in range(total + 1)]


def poly_to_text(p: RationalPolynomial, var: str = "t") -> str:
    """Render as ``c0 + c1*t + c2*t^2 + ...``; zero terms are omitted."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        coef = format_rational(c)
        if i == 0:
            term = coef
        elif i == 1:
            term = f"{coef}*{var}"
        else:
            term = f"{coef}*{var}^{i}"
        parts.append(term)
    text = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            text += " - " + term[1:]
        else:
            text += " + " + term
    return text
