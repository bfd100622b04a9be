"""Two-variable Kampe de Feriet double series on the diagonal x = y.

The double series is collected by total degree, so every check here is an
equality of truncated power series in a single variable x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import parametric
from .errors import DegenerateParameter
from .exact import Q, RationalLike, factorial, format_rational, pochhammer
from .parametric import ParametricContext
from .records import VerificationRecord, compare
from .series import (
    HyperParams,
    TruncatedSeries,
    binomial_series,
    check_lower,
    compose_mobius,
    contributing_limit,
    eval_terminating_pfq,
    pfq_truncated_series,
    series_mul,
)


def _rationals(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(Q(v) for v in values)


@dataclass(frozen=True)
class KdFParams:
    """Joint lists (alpha, beta), first-variable lists (a, c), second-variable lists (b, d)."""

    alpha: tuple[Fraction, ...] = ()
    beta: tuple[Fraction, ...] = ()
    a: tuple[Fraction, ...] = ()
    b: tuple[Fraction, ...] = ()
    c: tuple[Fraction, ...] = ()
    d: tuple[Fraction, ...] = ()

    def __post_init__(self):
        for name in ("alpha", "beta", "a", "b", "c", "d"):
            object.__setattr__(self, name, _rationals(getattr(self, name)))

    def swapped(self) -> KdFParams:
        """Exchange the roles of the two variables."""
        return KdFParams(self.alpha, self.beta, self.b, self.a, self.d, self.c)

    def to_json(self) -> dict:
        return {k: [format_rational(v) for v in getattr(self, k)] for k in ("alpha", "beta", "a", "b", "c", "d")}


def _single_terms(upper, lower, order: int, sign: int, which: str) -> list[Fraction]:
    """((upper))_i / ((lower))_i * sign^i / i! for i <= order (zero past termination)."""
    last = contributing_limit(upper, order)
    try:
        check_lower(lower, order)
    except DegenerateParameter as exc:
        k = exc.locus.get("k")
        raise DegenerateParameter("lower Pochhammer vanishes", m=k if which == "x" else 0, n=k if which == "y" else 0) from exc
    out = [Fraction(0)] * (order + 1)
    t = Fraction(1)
    for i in range(last + 1):
        out[i] = t
        num = Fraction(sign)
        for u in upper:
            num *= u + i
        den = Fraction(i + 1)
        for v in lower:
            den *= v + i
        if i < last:
            t = t * num / den
    return out


def eval_kdf_diagonal(params: KdFParams, order: int = 16, x_sign: int = 1, y_sign: int = 1) -> TruncatedSeries:
    """F(x_sign * x, y_sign * x) through x^order.

    Degenerate lower Pochhammers raise with the (m, n) index of the first bad term.
    """
    if x_sign not in (1, -1) or y_sign not in (1, -1):
        raise ValueError("sign flags must be +1 or -1")
    joint = _single_terms(params.alpha, params.beta, order, 1, "joint")
    first = _single_terms(params.a, params.c, order, x_sign, "x")
    second = _single_terms(params.b, params.d, order, y_sign, "y")
    # joint factor is ((alpha))_k / ((beta))_k without the 1/k! a single-series term carries
    out = []
    for k in range(order + 1):
        if not joint[k]:
            out.append(Fraction(0))
            continue
        inner = sum((first[i] * second[k - i] for i in range(k + 1)), Fraction(0))
        out.append(joint[k] * factorial(k) * inner)
    return TruncatedSeries(out)


def kdf_rearranged(params: KdFParams, order: int = 16, x_sign: int = 1, y_sign: int = 1) -> TruncatedSeries:
    """The same diagonal series written as a single sum over n of y^n times a terminating sum.

    Inner series: F(-n, (a), (1-d-n); (c), (1-b-n); (-1)^(s-u+1) x/y).
    """
    s, u = len(params.b), len(params.d)
    z = (-1 if (s - u + 1) % 2 else 1) * Fraction(x_sign, y_sign)
    out = []
    for n in range(order + 1):
        num = Fraction(1)
        for v in params.alpha + params.b:
            num *= pochhammer(v, n)
        den = Fraction(factorial(n))
        for v in params.beta + params.d:
            den *= pochhammer(v, n)
        if not den:
            raise DegenerateParameter("outer denominator vanishes", side="rhs", n=n)
        inner = eval_terminating_pfq(
            HyperParams([-n, *params.a, *(1 - dv - n for dv in params.d)], [*params.c, *(1 - bv - n for bv in params.b)]),
            n,
            argument=z,
        )
        out.append(num / den * y_sign**n * inner)
    return TruncatedSeries(out)


def verify_kdf_rearrangement(params: KdFParams, order: int = 12, x_sign: int = 1, y_sign: int = 1) -> VerificationRecord:
    lhs = eval_kdf_diagonal(params, order, x_sign, y_sign)
    rhs = kdf_rearranged(params, order, x_sign, y_sign)
    inputs = {**params.to_json(), "x_sign": x_sign, "y_sign": y_sign, "order": order}
    return compare("kdf-rearrangement", inputs, lhs, rhs)


def first_reduction_params(alpha, beta, a, b, c, f_list, m_list) -> KdFParams:
    a, b, c = Q(a), Q(b), Q(c)
    f_list = _rationals(f_list)
    m = sum(m_list)
    return KdFParams(
        alpha=alpha,
        beta=beta,
        a=(a, b, *(f + mj for f, mj in zip(f_list, m_list))),
        b=(c - a - b - m,),
        c=(c, *f_list),
        d=(),
    )


def verify_first_reduction(
    alpha: Sequence[RationalLike],
    beta: Sequence[RationalLike],
    a: RationalLike,
    b: RationalLike,
    c: RationalLike,
    f_list: Sequence[RationalLike] = (),
    m_list: Sequence[int] = (),
    order: int = 16,
) -> VerificationRecord:
    """Diagonal KdF with an upper pair a, b over c against the single series carrying Q_hat(-j)."""
    params = first_reduction_params(alpha, beta, a, b, c, f_list, m_list)
    ctx = ParametricContext(Q(a), Q(b), Q(c), _rationals(f_list), tuple(m_list))
    lhs = eval_kdf_diagonal(params, order)
    qhat = parametric.q_hat_polynomial(ctx)
    m = ctx.m
    rhs_upper = [*params.alpha, ctx.c - ctx.a - m, ctx.c - ctx.b - m]
    rhs_lower = [*params.beta, ctx.c]
    base = pfq_truncated_series(HyperParams(rhs_upper, rhs_lower), order=order)
    rhs = TruncatedSeries(base[j] * qhat(-j) for j in range(order + 1))
    flags = ("degree_drop",) if parametric.has_degree_drop(qhat, m) else ()
    inputs = {
        "alpha": list(params.alpha),
        "beta": list(params.beta),
        "a": ctx.a,
        "b": ctx.b,
        "c": ctx.c,
        "f": list(ctx.f_list),
        "m": list(ctx.m_list),
        "order": order,
    }
    return compare("first-reduction", inputs, lhs, rhs, flags=flags)


def verify_exton_reduction(
    alpha: Sequence[RationalLike], beta: Sequence[RationalLike], a: RationalLike, b: RationalLike, order: int = 16
) -> VerificationRecord:
    """c = 1+a-b, f = a/2: the right side collapses to F((alpha), a-2b, -b; (beta), 1+a-b; x)."""
    a, b = Q(a), Q(b)
    params = first_reduction_params(alpha, beta, a, b, 1 + a - b, [a / 2], [1])
    lhs = eval_kdf_diagonal(params, order)
    rhs = pfq_truncated_series(HyperParams([*params.alpha, a - 2 * b, -b], [*params.beta, 1 + a - b]), order=order)
    inputs = {"alpha": list(params.alpha), "beta": list(params.beta), "a": a, "b": b, "order": order}
    return compare("exton-reduction", inputs, lhs, rhs)


def second_reduction_params(alpha, beta, a, c, d, f_list, m_list) -> KdFParams:
    alpha, beta, a, c, d = Q(alpha), Q(beta), Q(a), Q(c), Q(d)
    f_list = _rationals(f_list)
    return KdFParams(
        alpha=(alpha,),
        beta=(beta,),
        a=(a, beta - d, *(f + mj for f, mj in zip(f_list, m_list))),
        b=(d,),
        c=(c, *f_list),
        d=(),
    )


def _mobius_side(alpha: Fraction, outer: TruncatedSeries, order: int) -> TruncatedSeries:
    """(1-x)^(-alpha) * outer(x/(x-1))."""
    return series_mul(binomial_series(alpha, 1, order), compose_mobius(outer, order))


def verify_second_reduction(
    alpha: RationalLike,
    beta: RationalLike,
    a: RationalLike,
    c: RationalLike,
    d: RationalLike,
    f_list: Sequence[RationalLike] = (),
    m_list: Sequence[int] = (),
    order: int = 16,
) -> VerificationRecord:
    """Diagonal KdF with second-variable parameter d against (1-x)^(-alpha) times a series in x/(x-1)."""
    alpha, beta, a, c, d = Q(alpha), Q(beta), Q(a), Q(c), Q(d)
    f_list = _rationals(f_list)
    m = sum(m_list)
    params = second_reduction_params(alpha, beta, a, c, d, f_list, m_list)
    lhs = eval_kdf_diagonal(params, order)
    qvc = parametric.q_vc_polynomial(a, c - a - m, f_list, m_list)
    base = pfq_truncated_series(HyperParams([alpha, beta - d, c - a - m], [beta, c]), order=order)
    outer = TruncatedSeries(base[j] * qvc(-j) for j in range(order + 1))
    rhs = _mobius_side(alpha, outer, order)
    inputs = {
        "alpha": alpha,
        "beta": beta,
        "a": a,
        "c": c,
        "d": d,
        "f": list(f_list),
        "m": list(m_list),
        "order": order,
    }
    return compare("second-reduction", inputs, lhs, rhs)


def verify_second_reduction_closed_form(
    alpha: RationalLike,
    beta: RationalLike,
    a: RationalLike,
    c: RationalLike,
    d: RationalLike,
    f: RationalLike | None = None,
    order: int = 16,
) -> VerificationRecord:
    """r = 0 (3F2 with c-a) or r = 1, m = 1 (4F3 with the pair xi+1, xi, xi = (c-a-1)f/(f-a))."""
    alpha, beta, a, c, d = Q(alpha), Q(beta), Q(a), Q(c), Q(d)
    inputs = {"alpha": alpha, "beta": beta, "a": a, "c": c, "d": d, "order": order}
    if f is None:
        f_list, m_list = (), ()
        outer_params = HyperParams([alpha, beta - d, c - a], [beta, c])
    else:
        f = Q(f)
        if f == a:
            raise DegenerateParameter("xi is undefined for f = a", side="rhs")
        xi = (c - a - 1) * f / (f - a)
        if not xi:
            raise DegenerateParameter("xi vanishes", side="rhs")
        f_list, m_list = (f,), (1,)
        outer_params = HyperParams([alpha, beta - d, c - a - 1, xi + 1], [beta, c, xi])
        inputs.update(f=f, xi=xi)
    lhs = eval_kdf_diagonal(second_reduction_params(alpha, beta, a, c, d, f_list, m_list), order)
    rhs = _mobius_side(alpha, pfq_truncated_series(outer_params, order=order), order)
    return compare("second-reduction-closed-form", inputs, lhs, rhs)


def verify_euler_transformation(a: RationalLike, b: RationalLike, c: RationalLike, order: int = 16) -> VerificationRecord:
    """2F1(a, b; c; x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1))."""
    a, b, c = Q(a), Q(b), Q(c)
    lhs = pfq_truncated_series(HyperParams([a, b], [c]), order=order)
    rhs = _mobius_side(a, pfq_truncated_series(HyperParams([a, c - b], [c]), order=order), order)
    return compare("euler-transformation", {"a": a, "b": b, "c": c, "order": order}, lhs, rhs)


def verify_miller_reduction(
    alpha: Sequence[RationalLike],
    beta: Sequence[RationalLike],
    a: RationalLike,
    b: RationalLike,
    f_list: Sequence[RationalLike] = (),
    m_list: Sequence[int] = (),
    order: int = 16,
) -> VerificationRecord:
    """F((alpha): a, (f+m); (beta): b, (f) | -x, x) against the series carrying Q_m(-j), lam = b-a-m."""
    a, b = Q(a), Q(b)
    f_list = _rationals(f_list)
    m = sum(m_list)
    params = KdFParams(
        alpha=alpha,
        beta=beta,
        a=(a, *(f + mj for f, mj in zip(f_list, m_list))),
        c=(b, *f_list),
    )
    lhs = eval_kdf_diagonal(params, order, x_sign=-1, y_sign=1)
    qvc = parametric.q_vc_polynomial(a, b - a - m, f_list, m_list)
    base = pfq_truncated_series(HyperParams([*params.alpha, b - a - m], [*params.beta, b]), order=order)
    rhs = TruncatedSeries(base[j] * qvc(-j) for j in range(order + 1))
    inputs = {
        "alpha": list(params.alpha),
        "beta": list(params.beta),
        "a": a,
        "b": b,
        "f": list(f_list),
        "m": list(m_list),
        "order": order,
    }
    return compare("miller-reduction", inputs, lhs, rhs)
