"""Terminating pFq sums at unit argument and truncated power series over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateParameter, OrderMismatch
from .exact import (
    Q,
    RationalLike,
    factorial,
    format_rational,
    is_nonpositive_integer,
    pochhammer,
    shifted_pochhammer_ratio,
)

# (f, m) pair contributing (f+m)_k / (f)_k to term k
Shift = tuple[RationalLike, int]


@dataclass(frozen=True)
class HyperParams:
    """Upper and lower parameter lists of a pFq series."""

    upper: tuple[Fraction, ...] = ()
    lower: tuple[Fraction, ...] = ()

    def __init__(self, upper: Iterable[RationalLike] = (), lower: Iterable[RationalLike] = ()):
        object.__setattr__(self, "upper", tuple(Q(a) for a in upper))
        object.__setattr__(self, "lower", tuple(Q(b) for b in lower))

    def to_json(self) -> dict:
        return {
            "upper": [format_rational(a) for a in self.upper],
            "lower": [format_rational(b) for b in self.lower],
        }


def termination_index(upper: Iterable[Fraction]) -> int | None:
    """Smallest j such that some upper parameter equals -j, if any."""
    best = None
    for a in upper:
        if is_nonpositive_integer(a):
            j = int(-a)
            best = j if best is None else min(best, j)
    return best


def contributing_limit(upper: Iterable[Fraction], limit: int) -> int:
    """Largest index whose term can be nonzero, capped at ``limit``."""
    j = termination_index(upper)
    return limit if j is None else min(limit, j)


def check_lower(lower: Iterable[Fraction], upto: int, **locus) -> None:
    """Raise unless (b)_k != 0 for every lower b and every k <= upto."""
    for b in lower:
        if is_nonpositive_integer(b) and int(-b) < upto:
            raise DegenerateParameter(
                "lower parameter Pochhammer vanishes",
                parameter=format_rational(b),
                k=int(-b) + 1,
                **locus,
            )


def _term_ratios(params: HyperParams, count: int) -> list[Fraction]:
    """Terms t_k = ((upper))_k / ((lower))_k / k! for k < count."""
    terms = []
    t = Fraction(1)
    for k in range(count):
        terms.append(t)
        num = Fraction(1)
        for a in params.upper:
            num *= a + k
        den = Fraction(k + 1)
        for b in params.lower:
            den *= b + k
        if k + 1 < count:
            if not den:
                # guarded by check_lower; kept as a hard stop
                raise DegenerateParameter("zero denominator", k=k + 1)
            t = t * num / den
    return terms


def eval_terminating_pfq(params: HyperParams, termination: int, argument: RationalLike = 1) -> Fraction:
    """Sum of a terminating pFq at z = argument (default 1).

    ``termination`` is n where -n is an upper parameter; a smaller
    non-positive integer upper parameter shortens the range further.
    """
    if termination < 0:
        raise ValueError("termination must be non-negative")
    stop = termination_index(params.upper)
    if stop is None or stop > termination:
        raise ValueError(f"no upper parameter in [-{termination}, 0]; series does not terminate there")
    # an earlier termination does not excuse a lower zero inside 0..termination
    check_lower(params.lower, termination)
    z = Q(argument)
    total = Fraction(0)
    zk = Fraction(1)
    for t in _term_ratios(params, stop + 1):
        total += t * zk
        zk *= z
    return total


def eval_shifted_pfq(base: HyperParams, shifts: Sequence[Shift], termination: int) -> Fraction:
    """Terminating series at unit argument with extra (f+m, f) parameter pairs."""
    if termination < 0:
        raise ValueError("termination must be non-negative")
    stop = termination_index(base.upper)
    if stop is None or stop > termination:
        raise ValueError(f"no upper parameter in [-{termination}, 0]; series does not terminate there")
    check_lower(base.lower + tuple(Q(f) for f, _ in shifts), termination)
    total = Fraction(0)
    for k, t in enumerate(_term_ratios(base, stop + 1)):
        for f, m in shifts:
            t *= shifted_pochhammer_ratio(f, m, k)
        total += t
    return total


class TruncatedSeries:
    """Power series in x known through x^order; length is always order + 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [Q(c) for c in coeffs]
        if order is not None:
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({self.to_json()})"

    def _check(self, other: TruncatedSeries):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return series_mul(self, other)

    def scale(self, s: RationalLike) -> TruncatedSeries:
        s = Q(s)
        return TruncatedSeries(c * s for c in self.coeffs)

    def first_mismatch(self, other: TruncatedSeries) -> int | None:
        self._check(other)
        for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return i
        return None

    def evaluate(self, x: RationalLike) -> Fraction:
        """The truncated polynomial evaluated at x."""
        x = Q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(n + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(out)


def pfq_truncated_series(
    params: HyperParams,
    shifts: Sequence[Shift] = (),
    argument_power: int = 1,
    order: int = 20,
) -> TruncatedSeries:
    """pFq in x^argument_power, known through x^order.

    Only the indices that reach degree <= order are checked for vanishing
    lower Pochhammers (shift denominators f included).
    """
    if argument_power not in (1, 2):
        raise ValueError("argument_power must be 1 or 2")
    window = order // argument_power
    check_lower(params.lower + tuple(Q(f) for f, _ in shifts), window)
    last = contributing_limit(params.upper, window)
    out = [Fraction(0)] * (order + 1)
    for k, t in enumerate(_term_ratios(params, last + 1)):
        for f, m in shifts:
            t *= shifted_pochhammer_ratio(f, m, k)
        out[k * argument_power] = t
    return TruncatedSeries(out)


def binomial_series(alpha: RationalLike, argument_power: int = 1, order: int = 20) -> TruncatedSeries:
    """(1 - x^p)^(-alpha): coefficient of x^(p*j) is (alpha)_j / j!."""
    if argument_power not in (1, 2):
        raise ValueError("argument_power must be 1 or 2")
    alpha = Q(alpha)
    out = [Fraction(0)] * (order + 1)
    for j in range(order // argument_power + 1):
        out[j * argument_power] = pochhammer(alpha, j) / factorial(j)
    return TruncatedSeries(out)


def compose_mobius(outer: TruncatedSeries, order: int) -> TruncatedSeries:
    """Re-expand sum c_n u^n, u = x/(x-1), as a series in x.

    u^n = (-1)^n x^n (1-x)^(-n), so c_n feeds x^(n+j) with weight (-1)^n (n)_j / j!.
    """
    if outer.order < order:
        raise OrderMismatch(f"outer series known only to order {outer.order}, need {order}")
    out = [Fraction(0)] * (order + 1)
    for n in range(order + 1):
        c = outer.coeffs[n]
        if not c:
            continue
        c = -c if n % 2 else c
        weight = Fraction(1)
        for j in range(order + 1 - n):
            out[n + j] += c * weight
            weight = weight * (n + j) / (j + 1)
    return TruncatedSeries(out)
