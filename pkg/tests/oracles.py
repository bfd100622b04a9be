"""Brute-force reference computations that share no code with the package."""

from fractions import Fraction


def poch(a, n):
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(a) + i
    return out


def fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def brute_pfq(upper, lower, n, z=1):
    """Sum of the first n+1 terms of pFq at z, straight from the definition."""
    total = Fraction(0)
    for k in range(n + 1):
        num = Fraction(1)
        for a in upper:
            num *= poch(a, k)
        den = Fraction(fact(k))
        for b in lower:
            den *= poch(b, k)
        total += num / den * Fraction(z) ** k
    return total


def brute_kdf_diagonal(alpha, beta, a, b, c, d, order, sx=1, sy=1):
    """Coefficients of the double series at x = y, summed over m + n = k."""
    out = []
    for k in range(order + 1):
        total = Fraction(0)
        for m in range(k + 1):
            n = k - m
            num = Fraction(sx) ** m * Fraction(sy) ** n
            for v in alpha:
                num *= poch(v, k)
            for v in a:
                num *= poch(v, m)
            for v in b:
                num *= poch(v, n)
            den = Fraction(fact(m) * fact(n))
            for v in beta:
                den *= poch(v, k)
            for v in c:
                den *= poch(v, m)
            for v in d:
                den *= poch(v, n)
            total += num / den
        out.append(total)
    return out


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def series_divide(num, den, order):
    """Power-series coefficients of num(x)/den(x) through x^order (den[0] != 0)."""
    num = list(num) + [Fraction(0)] * (order + 1)
    den = list(den) + [Fraction(0)] * (order + 1)
    out = []
    rem = num[: order + 1]
    for k in range(order + 1):
        q = rem[k] / den[0]
        out.append(q)
        for j in range(k, order + 1):
            rem[j] -= q * den[j - k]
    return out


def mobius_oracle(outer, order):
    """sum_{n<=K} c_n u^n with u = x/(x-1), as the rational function below expanded in x.

    sum_n c_n x^n (x-1)^(K-n) / (x-1)^K
    """
    K = len(outer) - 1
    numerator = [Fraction(0)]
    for n, c in enumerate(outer):
        term = [Fraction(0)] * n + [Fraction(c)]
        for _ in range(K - n):
            term = poly_mul(term, [Fraction(-1), Fraction(1)])
        numerator = [
            (numerator[i] if i < len(numerator) else 0) + (term[i] if i < len(term) else 0)
            for i in range(max(len(numerator), len(term)))
        ]
    denominator = [Fraction(1)]
    for _ in range(K):
        denominator = poly_mul(denominator, [Fraction(-1), Fraction(1)])
    return series_divide(numerator, denominator, order)
