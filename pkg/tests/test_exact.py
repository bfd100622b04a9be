import random
import threading
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_rationals
from hypersum.errors import DegenerateParameter
from hypersum.exact import (
    Q,
    format_rational,
    parse_rational,
    pochhammer,
    pochhammer_product,
    shifted_pochhammer_ratio,
    stirling2,
)
from oracles import fact, poch


@pytest.mark.parametrize(
    "a, n, expected",
    [(F(3), 0, F(1)), (F(1, 2), 3, F(15, 8)), (F(-2), 4, F(0))],
)
def test_pochhammer_examples(a, n, expected):
    assert pochhammer(a, n) == expected


def test_pochhammer_rejects_negative_index():
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_pochhammer_product_examples():
    assert pochhammer_product([], 5) == 1
    assert pochhammer_product([1, 2], 2) == 12
    assert pochhammer_product([F(1, 2), F(-1, 2)], 2) == F(-3, 16)


@pytest.mark.parametrize("j, k, expected", [(0, 0, 1), (4, 2, 7), (3, 5, 0), (5, 0, 0), (6, 3, 90)])
def test_stirling2_examples(j, k, expected):
    assert stirling2(j, k) == expected


def _bell_triangle(n):
    """Bell numbers B_0..B_n from the Aitken triangle (no Stirling numbers involved)."""
    bells = [1]
    row = [1]
    for _ in range(n):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        bells.append(row[0])
    return bells


def test_stirling_row_sums_are_bell_numbers():
    bells = _bell_triangle(12)
    for j in range(13):
        assert sum(stirling2(j, k) for k in range(j + 1)) == bells[j]


def test_stirling_recurrence():
    for j in range(1, 15):
        for k in range(1, j + 1):
            assert stirling2(j, k) == k * stirling2(j - 1, k) + stirling2(j - 1, k - 1)


def test_stirling_concurrent_readers_agree():
    results = []

    def worker(j):
        results.append((j, [stirling2(j, k) for k in range(j + 1)]))

    threads = [threading.Thread(target=worker, args=(j,)) for j in range(30, 60)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for j, row in results:
        assert row == [stirling2(j, k) for k in range(j + 1)]


def test_shifted_ratio_examples():
    assert shifted_pochhammer_ratio(2, 1, 3) == F(5, 2)
    assert shifted_pochhammer_ratio(F(1, 3), 2, 0) == 1
    assert shifted_pochhammer_ratio(F(3, 2), 2, 2) == F(21, 5)
    # both forms of the ratio agree on the last example
    assert poch(F(3, 2) + 2, 2) / poch(F(3, 2), 2) == F(21, 5)


def test_shifted_ratio_degenerate():
    with pytest.raises(DegenerateParameter):
        shifted_pochhammer_ratio(-1, 3, 0)
    with pytest.raises(DegenerateParameter):
        shifted_pochhammer_ratio(-2, 1, 4)


def test_shifted_ratio_cross_multiplied():
    rng = random.Random(11)
    checked = 0
    while checked < 200:
        f = F(rng.randint(-12, 12), rng.randint(1, 12))
        m, s = rng.randint(1, 4), rng.randint(0, 8)
        if not poch(f, m) or not poch(f, s):
            continue
        assert shifted_pochhammer_ratio(f, m, s) * poch(f, s) * poch(f, m) == poch(f + m, s) * poch(f, m)
        checked += 1


@settings(max_examples=200)
@given(small_rationals, st.integers(0, 20), st.integers(0, 20))
def test_pochhammer_split(a, n, k):
    assert pochhammer(a, n + k) == pochhammer(a, k) * pochhammer(a + k, n)


def test_half_integer_flip_identities():
    half = F(1, 2)
    for j in range(13):
        for k in range(j + 1):
            assert pochhammer(half, j - k) == (-1) ** k * pochhammer(half, j) / pochhammer(half - j, k)
            assert F(1, fact(j - k)) == (-1) ** k * pochhammer(-j, k) / fact(j)


@pytest.mark.parametrize("text, value", [("15/8", F(15, 8)), ("-3", F(-3)), ("0", F(0)), ("6/4", F(3, 2)), (" -2/6 ", F(-1, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "", "a/b", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_canonical():
    assert format_rational(F(30, 16)) == "15/8"
    assert format_rational(F(-6, 2)) == "-3"
    assert format_rational(F(0, 5)) == "0"
    assert F(-6, 4).denominator > 0


def test_q_refuses_floats():
    with pytest.raises(TypeError):
        Q(0.5)
    assert Q("2/4") == F(1, 2)
