"""Single-variable identities, each checked by computing both sides exactly.

Left-hand sides are always summed term by term; right-hand sides go through
closed forms and the parametric polynomials. The two paths share nothing
beyond Pochhammer symbols.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import parametric
from .errors import DegenerateParameter, ProvisoViolated
from .exact import Q, RationalLike, factorial, format_rational, pochhammer
from .parametric import ParametricContext
from .records import VerificationRecord, compare
from .series import (
    HyperParams,
    TruncatedSeries,
    binomial_series,
    eval_shifted_pfq,
    eval_terminating_pfq,
    pfq_truncated_series,
    series_mul,
)

HALF = Fraction(1, 2)

# Sample values of n for the quadratic-argument transformations; n need not be an integer.
RAMANUJAN_N_SAMPLES = (Fraction(5, 7), Fraction(-3, 2), Fraction(1, 3), Fraction(4))


def _ratio(num: Fraction, den: Fraction, what: str, **locus) -> Fraction:
    if not den:
        raise DegenerateParameter(f"{what} denominator vanishes", side="rhs", **locus)
    return num / den


def _check_n(n) -> int:
    if isinstance(n, Fraction):
        if n.denominator != 1:
            raise ValueError("n must be a non-negative integer")
        n = int(n)
    if n < 0:
        raise ValueError("n must be a non-negative integer")
    return n


def _shift_inputs(f_list, m_list) -> dict:
    return {"f": [Q(f) for f in f_list], "m": list(m_list)}


def verify_saalschutz_classical(a: RationalLike, b: RationalLike, c: RationalLike, n: int) -> VerificationRecord:
    a, b, c, n = Q(a), Q(b), Q(c), _check_n(n)
    sigma = c - a - b - 1
    lhs = eval_terminating_pfq(HyperParams([-n, a, b], [c, -n - sigma]), n)
    rhs = _ratio(
        pochhammer(c - a, n) * pochhammer(c - b, n),
        pochhammer(c, n) * pochhammer(c - a - b, n),
        "(c)_n (c-a-b)_n",
        n=n,
    )
    return compare("saalschutz-classical", {"a": a, "b": b, "c": c, "n": n}, lhs, rhs, index=n)


def verify_saalschutz_contiguous(
    a: RationalLike, b: RationalLike, c: RationalLike, n: int, p: int
) -> VerificationRecord:
    a, b, c, n, p = Q(a), Q(b), Q(c), _check_n(n), _check_n(p)
    sigma = c - a - b - 1
    lhs = eval_terminating_pfq(HyperParams([-n, a, b], [c, p - n - sigma]), n)
    factor = _ratio(
        pochhammer(c - a - p, n) * pochhammer(c - b - p, n),
        pochhammer(c, n) * pochhammer(c - a - b - p, n),
        "(c)_n (c-a-b-p)_n",
        n=n,
    )
    tail = eval_terminating_pfq(HyperParams([-p, -n, c - a - b - p], [c - a - p, c - b - p]), min(n, p))
    return compare(
        "saalschutz-contiguous",
        {"a": a, "b": b, "c": c, "n": n, "p": p},
        lhs,
        factor * tail,
        index=n,
    )


def verify_extended_saalschutz(ctx: ParametricContext, n: int) -> VerificationRecord:
    """Terminating (r+3)F(r+2) at 1 with shift pairs against its Q_hat closed form."""
    n = _check_n(n)
    a, b, c, m = ctx.a, ctx.b, ctx.c, ctx.m
    lhs = eval_shifted_pfq(HyperParams([-n, a, b], [c, m - n - ctx.sigma]), ctx.shifts, n)
    qhat = parametric.q_hat_polynomial(ctx)
    prefactor = _ratio(
        pochhammer(c - a - m, n) * pochhammer(c - b - m, n),
        pochhammer(c, n) * pochhammer(c - a - b - m, n),
        "(c)_n (c-a-b-m)_n",
        n=n,
    )
    rhs = prefactor * qhat(-n)
    flags = ("degree_drop",) if parametric.has_degree_drop(qhat, m) else ()
    inputs = {"a": a, "b": b, "c": c, **_shift_inputs(ctx.f_list, ctx.m_list), "n": n}
    return compare("extended-saalschutz", inputs, lhs, rhs, index=n, flags=flags)


def verify_extended_vandermonde_chu(
    a: RationalLike,
    c: RationalLike,
    f_list: Sequence[RationalLike],
    m_list: Sequence[int],
    n: int,
) -> VerificationRecord:
    a, c, n = Q(a), Q(c), _check_n(n)
    f_list = [Q(f) for f in f_list]
    m = sum(m_list)
    if not pochhammer(c - a - m, m):
        raise ProvisoViolated("(c-a-m)_m must be nonzero")
    if a in f_list:
        raise ProvisoViolated("a must differ from every f_j")
    lhs = eval_shifted_pfq(HyperParams([-n, a], [c]), list(zip(f_list, m_list)), n)
    qvc = parametric.q_vc_polynomial(a, c - a - m, f_list, m_list)
    rhs = _ratio(pochhammer(c - a - m, n), pochhammer(c, n), "(c)_n", n=n) * qvc(-n)
    inputs = {"a": a, "c": c, **_shift_inputs(f_list, m_list), "n": n}
    return compare("extended-vandermonde-chu", inputs, lhs, rhs, index=n)


def ramanujan_lhs(p: int, n: RationalLike, f_list, m_list, order: int) -> TruncatedSeries:
    """(1-x^2)^(-1/2) * (r+2)F(r+1)(-n+p/2, n+p/2, (f+m); p+1/2+m, (f); x^2)."""
    n = Q(n)
    m = sum(m_list)
    half_p = Fraction(p, 2)
    inner = pfq_truncated_series(
        HyperParams([-n + half_p, n + half_p], [p + HALF + m]),
        list(zip([Q(f) for f in f_list], m_list)),
        argument_power=2,
        order=order,
    )
    return series_mul(binomial_series(HALF, 2, order), inner)


def ramanujan_context(p: int, n: RationalLike, f_list, m_list) -> ParametricContext:
    n = Q(n)
    m = sum(m_list)
    half_p = Fraction(p, 2)
    return ParametricContext(n + half_p, -n + half_p, p + HALF + m, tuple(f_list), tuple(m_list))


def ramanujan_rhs(p: int, n: RationalLike, f_list, m_list, order: int) -> TruncatedSeries:
    """Coefficient of x^(2j): (1/2+p/2-n)_j (1/2+p/2+n)_j / ((p+1/2+m)_j j!) * Q_hat(-j)."""
    n = Q(n)
    m = sum(m_list)
    half_p = Fraction(p, 2)
    qhat = parametric.q_hat_polynomial(ramanujan_context(p, n, f_list, m_list))
    lower = p + HALF + m
    out = [Fraction(0)] * (order + 1)
    for j in range(order // 2 + 1):
        out[2 * j] = (
            pochhammer(HALF + half_p - n, j)
            * pochhammer(HALF + half_p + n, j)
            / (pochhammer(lower, j) * factorial(j))
            * qhat(-j)
        )
    return TruncatedSeries(out)


def verify_ramanujan_extension(
    p: int,
    n: RationalLike,
    f_list: Sequence[RationalLike] = (),
    m_list: Sequence[int] = (),
    order: int = 20,
) -> VerificationRecord:
    if p not in (0, 1):
        raise ValueError("p must be 0 or 1")
    n = Q(n)
    rhs = ramanujan_rhs(p, n, f_list, m_list, order)
    lhs = ramanujan_lhs(p, n, f_list, m_list, order)
    inputs = {"p": p, "n": n, **_shift_inputs(f_list, m_list), "order": order}
    return compare("ramanujan-extension", inputs, lhs, rhs)


def verify_ramanujan_closed_form(p: int, n: RationalLike, f: RationalLike | None = None, order: int = 20) -> VerificationRecord:
    """The r=0 and r=1, m=1 cases against their printed closed forms.

    With f given, the right side is a 3F2 carrying the pair (eta+1, eta) where
    eta = (n^2-1/4) f / (n^2 - f/2) for p = 0 and (n^2-1) f / (n^2 - f/2 - 1/4) for p = 1.
    """
    if p not in (0, 1):
        raise ValueError("p must be 0 or 1")
    n = Q(n)
    half_p = Fraction(p, 2)
    upper = [HALF + half_p - n, HALF + half_p + n]
    if f is None:
        f_list, m_list = [], []
        lower = [p + HALF]
        inputs = {"p": p, "n": n, "order": order}
    else:
        f = Q(f)
        f_list, m_list = [f], [1]
        if p == 0:
            num, den = (n * n - Fraction(1, 4)) * f, n * n - f / 2
        else:
            num, den = (n * n - 1) * f, n * n - f / 2 - Fraction(1, 4)
        eta = _ratio(num, den, "eta", n=format_rational(n))
        if not eta:
            raise DegenerateParameter("eta vanishes", side="rhs")
        upper.append(eta + 1)
        lower = [p + HALF + 1, eta]
        inputs = {"p": p, "n": n, "f": f, "eta": eta, "order": order}
    lhs = ramanujan_lhs(p, n, f_list, m_list, order)
    rhs = pfq_truncated_series(HyperParams(upper, lower), argument_power=2, order=order)
    return compare("ramanujan-closed-form", inputs, lhs, rhs)


def verify_extended_saalschutz_linear(
    a: RationalLike, b: RationalLike, c: RationalLike, f: RationalLike, n: int
) -> VerificationRecord:
    """The m=1 case with the explicit factor 1 + n/eta, eta = (c-a-1)(c-b-1)f / (ab + (c-a-b-1)f)."""
    a, b, c, f, n = Q(a), Q(b), Q(c), Q(f), _check_n(n)
    sigma = c - a - b - 1
    lhs = eval_shifted_pfq(HyperParams([-n, a, b], [c, 1 - n - sigma]), [(f, 1)], n)
    eta_den = a * b + sigma * f
    prefactor = _ratio(
        pochhammer(c - a - 1, n) * pochhammer(c - b - 1, n),
        pochhammer(c, n) * pochhammer(c - a - b - 1, n),
        "(c)_n (c-a-b-1)_n",
        n=n,
    )
    if eta_den:
        eta = (c - a - 1) * (c - b - 1) * f / eta_den
        if not eta:
            raise DegenerateParameter("eta vanishes", side="rhs")
        rhs = prefactor * (1 + n / eta)
        notes = f"eta={format_rational(eta)}"
    else:
        rhs = prefactor
        notes = "eta=infinity"
    inputs = {"a": a, "b": b, "c": c, "f": f, "n": n}
    return compare("extended-saalschutz-linear", inputs, lhs, rhs, index=n, notes=notes)


def verify_known_4f3_specialization(a: RationalLike, b: RationalLike, n: int) -> VerificationRecord:
    """4F3(-n, a, b, 1+a/2; 1+a-b, 1+2b-n, a/2; 1) = (a-2b)_n (-b)_n / ((1+a-b)_n (-2b)_n)."""
    a, b, n = Q(a), Q(b), _check_n(n)
    if a == 2 * b:
        raise ProvisoViolated("a must differ from 2b")
    lhs = eval_terminating_pfq(HyperParams([-n, a, b, 1 + a / 2], [1 + a - b, 1 + 2 * b - n, a / 2]), n)
    rhs = _ratio(
        pochhammer(a - 2 * b, n) * pochhammer(-b, n),
        pochhammer(1 + a - b, n) * pochhammer(-2 * b, n),
        "(1+a-b)_n (-2b)_n",
        n=n,
    )
    return compare("known-4f3", {"a": a, "b": b, "n": n}, lhs, rhs, index=n)


# Identities used inside the derivations, checked on their own.


def verify_pochhammer_split(a: RationalLike, s: int, k: int) -> VerificationRecord:
    """(a)_{s+k} = (a)_k (a+k)_s."""
    a = Q(a)
    lhs = pochhammer(a, s + k)
    rhs = pochhammer(a, k) * pochhammer(a + k, s)
    return compare("pochhammer-split", {"a": a, "s": s, "k": k}, lhs, rhs)


def verify_diagonal_flip(j: int, k: int) -> VerificationRecord:
    """(1/2)_{j-k} = (-1)^k (1/2)_j / (1/2-j)_k and 1/(j-k)! = (-1)^k (-j)_k / j!.

    Both sides are packed as pairs so one record covers the two identities.
    """
    if not 0 <= k <= j:
        raise ValueError("need 0 <= k <= j")
    sign = (-1) ** k
    lhs_half = pochhammer(HALF, j - k)
    rhs_half = sign * pochhammer(HALF, j) / pochhammer(HALF - j, k)
    lhs_fact = Fraction(1, factorial(j - k))
    rhs_fact = sign * pochhammer(-j, k) / factorial(j)
    record = compare("diagonal-flip", {"j": j, "k": k}, lhs_half, rhs_half)
    if record.passed and lhs_fact != rhs_fact:
        record.passed = False
        record.mismatch = {"index": 1}
    record.notes = f"factorial form: {format_rational(lhs_fact)} vs {format_rational(rhs_fact)}"
    return record


def verify_balanced_step(
    a: RationalLike, b: RationalLike, c: RationalLike, m: int, n: int, k: int
) -> VerificationRecord:
    """(m-n-sigma)_k (c-a-b-m)_{n-k} = (-1)^k (c-a-b-m)_n with sigma = c-a-b-1."""
    a, b, c = Q(a), Q(b), Q(c)
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    sigma = c - a - b - 1
    lhs = pochhammer(m - n - sigma, k) * pochhammer(c - a - b - m, n - k)
    rhs = (-1) ** k * pochhammer(c - a - b - m, n)
    return compare("balanced-step", {"a": a, "b": b, "c": c, "m": m, "n": n, "k": k}, lhs, rhs, index=k)
