"""Parametric polynomials attached to integer-shifted parameter pairs.

``q_hat_polynomial`` gives the Saalschutz-side polynomial whose value at
t = -n is the factor H_n; ``q_vc_polynomial`` gives its Vandermonde-Chu
counterpart. Neither routine ever looks for roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateParameter
from .exact import (
    Q,
    RationalLike,
    factorial,
    format_rational,
    pochhammer,
    pochhammer_product,
    stirling2,
)
from .polynomials import (
    RationalPolynomial,
    poly_add,
    poly_eval,
    poly_mul,
    poly_negate_variable,
    poly_scale,
    rising_factorial_poly,
    sigma_coefficients,
)
from .series import HyperParams, eval_terminating_pfq


def _normalize_shifts(f_list, m_list):
    f_list = tuple(Q(f) for f in f_list)
    m_list = tuple(int(m) for m in m_list)
    if len(f_list) != len(m_list):
        raise ValueError("f_list and m_list must have equal length")
    if any(m < 1 for m in m_list):
        raise ValueError("every shift m_j must be a positive integer")
    return f_list, m_list


def _lambda(f_list, m_list) -> Fraction:
    lam = pochhammer_product_pairs(f_list, m_list)
    if not lam:
        raise DegenerateParameter("prod (f_j)_{m_j} vanishes", f=[format_rational(f) for f in f_list])
    return lam


def pochhammer_product_pairs(f_list, m_list) -> Fraction:
    out = Fraction(1)
    for f, m in zip(f_list, m_list):
        out *= pochhammer(f, m)
    return out


@dataclass(frozen=True)
class ParametricContext:
    """Parameters a, b, c and shift pairs (f_j + m_j, f_j).

    Validated on construction: (c-a-m)_m, (c-b-m)_m and prod (f_j)_{m_j}
    must all be nonzero.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    f_list: tuple[Fraction, ...] = ()
    m_list: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        f_list, m_list = _normalize_shifts(self.f_list, self.m_list)
        object.__setattr__(self, "f_list", f_list)
        object.__setattr__(self, "m_list", m_list)
        m = self.m
        if not pochhammer(self.c - self.a - m, m):
            raise DegenerateParameter("(c-a-m)_m vanishes", c_minus_a_minus_m=format_rational(self.c - self.a - m))
        if not pochhammer(self.c - self.b - m, m):
            raise DegenerateParameter("(c-b-m)_m vanishes", c_minus_b_minus_m=format_rational(self.c - self.b - m))
        _lambda(f_list, m_list)

    @property
    def m(self) -> int:
        return sum(self.m_list)

    @property
    def sigma(self) -> Fraction:
        return self.c - self.a - self.b - 1

    @property
    def shifts(self) -> tuple[tuple[Fraction, int], ...]:
        return tuple(zip(self.f_list, self.m_list))

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "c": format_rational(self.c),
            "f": [format_rational(f) for f in self.f_list],
            "m": list(self.m_list),
        }


def coefficients_C(f_list: Sequence[RationalLike], m_list: Sequence[int]) -> list[Fraction]:
    """C_0..C_m from the product expansion and Stirling numbers of the second kind.

    C_k = (1/Lambda) * sum_{j>=k} sigma_j S(j, k), with Lambda = prod (f_j)_{m_j}.
    """
    f_list, m_list = _normalize_shifts(f_list, m_list)
    lam = _lambda(f_list, m_list)
    sigma = sigma_coefficients(f_list, m_list)
    m = len(sigma) - 1
    return [sum((sigma[j] * stirling2(j, k) for j in range(k, m + 1)), Fraction(0)) / lam for k in range(m + 1)]


def coefficients_C_terminating_sum(f_list: Sequence[RationalLike], m_list: Sequence[int]) -> list[Fraction]:
    """The same C_k from the terminating sum (-1)^k/k! * sum_i (-k)_i/i! prod (f+m)_i/(f)_i.

    Kept deliberately separate from ``coefficients_C`` so each checks the other.
    """
    f_list, m_list = _normalize_shifts(f_list, m_list)
    _lambda(f_list, m_list)
    m = sum(m_list)
    out = []
    for k in range(m + 1):
        total = Fraction(0)
        for i in range(k + 1):
            den = pochhammer_product(f_list, i)
            if not den:
                raise DegenerateParameter("(f_j)_i vanishes", k=k, i=i)
            num = pochhammer_product([f + mj for f, mj in zip(f_list, m_list)], i)
            total += pochhammer(-k, i) / factorial(i) * num / den
        out.append((-1) ** k * total / factorial(k))
    return out


def G_polynomial(ctx: ParametricContext, k: int) -> RationalPolynomial:
    """3F2(-m+k, t+k, c-a-b-m; c-a-m+k, c-b-m+k; 1) expanded in t (degree m-k)."""
    m = ctx.m
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in 0..{m}")
    a, b, c = ctx.a, ctx.b, ctx.c
    e = c - a - b - m
    l1 = c - a - m + k
    l2 = c - b - m + k
    out = RationalPolynomial()
    for i in range(m - k + 1):
        den = pochhammer(l1, i) * pochhammer(l2, i) * factorial(i)
        if not den:
            raise DegenerateParameter("lower Pochhammer vanishes in G", k=k, i=i)
        coef = pochhammer(k - m, i) * pochhammer(e, i) / den
        if coef:
            out = poly_add(out, poly_scale(rising_factorial_poly(k, i), coef))
    return out


def _alternating(k: int) -> int:
    return -1 if k % 2 else 1


def q_hat_polynomial(ctx: ParametricContext) -> RationalPolynomial:
    """The Saalschutz-side polynomial, normalized to the value 1 at t = 0.

    Its degree is at most m; see ``has_degree_drop`` for the degenerate case.
    """
    a, b, c, m = ctx.a, ctx.b, ctx.c, ctx.m
    C = coefficients_C(ctx.f_list, ctx.m_list)
    out = RationalPolynomial()
    for k in range(m + 1):
        den = pochhammer(c - a - m, k) * pochhammer(c - b - m, k)
        weight = _alternating(k) * C[k] * pochhammer(a, k) * pochhammer(b, k) / den
        if not weight:
            continue
        t_k = rising_factorial_poly(0, k)
        out = poly_add(out, poly_scale(poly_mul(t_k, G_polynomial(ctx, k)), weight))
    return out


def has_degree_drop(poly: RationalPolynomial, m: int) -> bool:
    """True when the leading coefficient in degree m vanished (a zero went to infinity)."""
    return (poly.degree or 0) < m


def h_n(ctx: ParametricContext, n: int, method: str = "poly") -> Fraction:
    """H_n as Q_hat(-n).

    ``method="sum"`` instead sums the k <= min(m, n) terms directly, with each
    G evaluated as a scalar 3F2, which is an independent route to the same value.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if method == "poly":
        return poly_eval(q_hat_polynomial(ctx), -n)
    if method != "sum":
        raise ValueError(f"unknown method {method!r}")
    a, b, c, m = ctx.a, ctx.b, ctx.c, ctx.m
    C = coefficients_C(ctx.f_list, ctx.m_list)
    total = Fraction(0)
    for k in range(min(m, n) + 1):
        den = pochhammer(c - a - m, k) * pochhammer(c - b - m, k)
        weight = (-1) ** k * C[k] * pochhammer(a, k) * pochhammer(b, k) * pochhammer(-n, k) / den
        g = eval_terminating_pfq(
            HyperParams([k - m, k - n, c - a - b - m], [c - a - m + k, c - b - m + k]),
            m - k,
        )
        total += weight * g
    return total


def q_vc_polynomial(
    b: RationalLike,
    lam: RationalLike,
    f_list: Sequence[RationalLike],
    m_list: Sequence[int],
) -> RationalPolynomial:
    """(1/(lam)_m) * sum_k (b)_k C_k (t)_k (lam - t)_{m-k}, equal to 1 at t = 0.

    For the terminating 2F1-type sum with upper parameters -n, a and lower c,
    call with b = a and lam = c - a - m.
    """
    b, lam = Q(b), Q(lam)
    f_list, m_list = _normalize_shifts(f_list, m_list)
    m = sum(m_list)
    norm = pochhammer(lam, m)
    if not norm:
        raise DegenerateParameter("(lambda)_m vanishes", lam=format_rational(lam), m=m)
    C = coefficients_C(f_list, m_list)
    out = RationalPolynomial()
    for k in range(m + 1):
        weight = pochhammer(b, k) * C[k] / norm
        if not weight:
            continue
        tail = poly_negate_variable(rising_factorial_poly(lam, m - k))
        out = poly_add(out, poly_scale(poly_mul(rising_factorial_poly(0, k), tail), weight))
    return out


def linear_zero(poly: RationalPolynomial) -> Fraction:
    """Zero of a degree-1 polynomial; used only to cross-check closed forms for m = 1."""
    if poly.degree != 1:
        raise ValueError("linear_zero needs a polynomial of degree exactly 1")
    return -poly[0] / poly[1]
