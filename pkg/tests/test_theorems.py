from fractions import Fraction as F
from unittest import mock

import pytest

from hypersum import parametric, theorems as th
from hypersum.errors import DegenerateParameter, ProvisoViolated
from hypersum.parametric import ParametricContext
from hypersum.series import TruncatedSeries
from oracles import brute_pfq, poch


def test_saalschutz_classical_examples():
    rec = th.verify_saalschutz_classical(1, 1, 3, 2)
    assert rec.passed and rec.lhs == F(3, 2)
    rec = th.verify_saalschutz_classical(F(1, 2), F(-1, 3), F(5, 2), 4)
    assert rec.passed and rec.lhs == F(11339, 12012)


def test_saalschutz_contiguous_examples():
    rec = th.verify_saalschutz_contiguous(1, F(1, 2), 3, 3, 1)
    assert rec.passed and rec.lhs == F(7, 5)
    p0 = th.verify_saalschutz_contiguous(F(2, 3), F(1, 5), F(7, 2), 4, 0)
    classical = th.verify_saalschutz_classical(F(2, 3), F(1, 5), F(7, 2), 4)
    assert p0.passed and p0.lhs == classical.lhs and p0.rhs == classical.rhs


def test_extended_saalschutz_r2_example():
    ctx = ParametricContext(F(1, 2), F(2, 3), 4, (F(3, 2), F(5, 2)), (1, 2))
    rec = th.verify_extended_saalschutz(ctx, 5)
    assert rec.passed
    assert rec.lhs == F(-429, 2737)


def test_extended_saalschutz_linear_example():
    a, b, c, f = F(1, 2), F(1, 3), F(3), F(2)
    rec = th.verify_extended_saalschutz_linear(a, b, c, f, 2)
    assert rec.passed and rec.lhs == F(100, 91) and rec.notes == "eta=2"
    # oracle: 4F3 with the shift pair written out
    assert brute_pfq([-2, a, b, f + 1], [c, 1 - 2 - (c - a - b - 1), f], 2) == F(100, 91)
    ext = th.verify_extended_saalschutz(ParametricContext(a, b, c, (f,), (1,)), 2)
    assert ext.passed and ext.rhs == rec.rhs


def test_extended_r0_equals_classical():
    args = (F(3, 4), F(-2, 5), F(9, 2))
    for n in range(6):
        ext = th.verify_extended_saalschutz(ParametricContext(*args), n)
        cl = th.verify_saalschutz_classical(*args, n)
        assert ext.lhs == cl.lhs and ext.rhs == cl.rhs and ext.passed


def test_vandermonde_chu_examples():
    rec = th.verify_extended_vandermonde_chu(F(1, 3), F(7, 2), [F(2, 5), F(-1, 3)], [2, 1], 6)
    assert rec.passed and rec.lhs == F(54791725, 137918781)
    r0 = th.verify_extended_vandermonde_chu(1, 3, [], [], 2)
    assert r0.passed and r0.lhs == F(1, 2)


def test_vandermonde_chu_m1_xi():
    a, c, f = F(1, 3), F(7, 2), F(2, 5)
    xi = (c - a - 1) * f / (f - a)
    for n in range(8):
        rec = th.verify_extended_vandermonde_chu(a, c, [f], [1], n)
        assert rec.passed
        assert rec.rhs == poch(c - a - 1, n) / poch(c, n) * poch(xi + 1, n) / poch(xi, n)


def test_vandermonde_chu_proviso():
    with pytest.raises(ProvisoViolated):
        th.verify_extended_vandermonde_chu(F(1, 3), F(1, 3) + 1, [2], [1], 3)
    with pytest.raises(ProvisoViolated):
        th.verify_extended_vandermonde_chu(F(2), F(11, 2), [2], [1], 3)


def test_known_4f3():
    rec = th.verify_known_4f3_specialization(3, F(1, 3), 2)
    assert rec.passed and rec.lhs == F(5, 11)
    with pytest.raises(DegenerateParameter):
        th.verify_known_4f3_specialization(3, F(1, 2), 2)
    with pytest.raises(ProvisoViolated):
        th.verify_known_4f3_specialization(1, F(1, 2), 2)


def test_known_4f3_through_extended_saalschutz():
    a, b, n = F(3), F(1, 3), 2
    rec = th.verify_extended_saalschutz(ParametricContext(a, b, 1 + a - b, (a / 2,), (1,)), n)
    assert rec.passed and "degree_drop" in rec.flags
    assert rec.lhs == th.verify_known_4f3_specialization(a, b, n).lhs


@pytest.mark.parametrize("p", [0, 1])
@pytest.mark.parametrize("n", th.RAMANUJAN_N_SAMPLES)
def test_ramanujan_r0_and_odd_coefficients(p, n):
    rec = th.verify_ramanujan_extension(p, n, order=20)
    assert rec.passed
    assert all(rec.lhs[k] == 0 for k in range(1, 21, 2))
    assert th.verify_ramanujan_closed_form(p, n, order=20).passed


@pytest.mark.parametrize("p", [0, 1])
def test_ramanujan_m1_closed_form(p):
    for n in th.RAMANUJAN_N_SAMPLES:
        assert th.verify_ramanujan_closed_form(p, n, f=F(2, 7), order=20).passed
        assert th.verify_ramanujan_extension(p, n, [F(2, 7)], [1], order=20).passed


def test_ramanujan_p0_is_ramanujan_classic():
    n = F(5, 7)
    lhs = th.ramanujan_lhs(0, n, [], [], 12)
    expected = [0] * 13
    for j in range(7):
        expected[2 * j] = poch(F(1, 2) - n, j) * poch(F(1, 2) + n, j) / (poch(F(1, 2), j) * poch(1, j))
    assert list(lhs) == expected


def test_ramanujan_negating_n():
    for p in (0, 1):
        for n in (F(5, 7), F(1, 3), 4):
            f_list, m_list = [F(2, 3), F(-5, 4)], [2, 1]
            assert th.ramanujan_lhs(p, n, f_list, m_list, 16) == th.ramanujan_lhs(p, -n, f_list, m_list, 16)
            assert th.ramanujan_rhs(p, n, f_list, m_list, 16) == th.ramanujan_rhs(p, -n, f_list, m_list, 16)


def test_extended_linear_eta_infinite():
    # ab + sigma f = 0 makes eta infinite and the closed form the bare prefactor
    a, b, f = F(1, 2), F(1, 3), F(1, 5)
    c = a + b + 1 - a * b / f  # sigma = -ab/f
    rec = th.verify_extended_saalschutz_linear(a, b, c, f, 3)
    assert rec.passed and rec.notes == "eta=infinity"


@pytest.mark.parametrize(
    "call",
    [
        lambda: th.verify_saalschutz_classical(F(1, 2), F(1, 3), F(7, 2), 0),
        lambda: th.verify_saalschutz_contiguous(F(1, 2), F(1, 3), F(7, 2), 0, 2),
        lambda: th.verify_extended_saalschutz(ParametricContext(F(1, 2), F(1, 3), F(9, 2), (F(2, 3),), (2,)), 0),
        lambda: th.verify_extended_saalschutz_linear(F(1, 2), F(1, 3), 3, 2, 0),
        lambda: th.verify_extended_vandermonde_chu(F(1, 3), F(7, 2), [F(2, 5)], [2], 0),
        lambda: th.verify_known_4f3_specialization(3, F(1, 3), 0),
    ],
)
def test_n_zero_passes_with_ones(call):
    rec = call()
    assert rec.passed and rec.lhs == 1 and rec.rhs == 1


def test_micro_verifiers():
    for s in range(6):
        for k in range(6):
            assert th.verify_pochhammer_split(F(-7, 3), s, k).passed
    for j in range(10):
        for k in range(j + 1):
            assert th.verify_diagonal_flip(j, k).passed
    for n in range(8):
        for k in range(n + 1):
            assert th.verify_balanced_step(F(1, 2), F(2, 3), F(11, 3), 2, n, k).passed


def test_mismatch_locus_under_sign_mutation():
    original = parametric.coefficients_C

    def flipped(f_list, m_list):
        c = list(original(f_list, m_list))
        if len(c) > 1:
            c[1] = -c[1]
        return c

    ctx = ParametricContext(F(1, 2), F(1, 3), 3, (F(2),), (1,))
    assert th.verify_extended_saalschutz(ctx, 0).passed
    with mock.patch.object(parametric, "coefficients_C", flipped):
        rec = th.verify_extended_saalschutz(ctx, 1)
    assert not rec.passed and rec.mismatch == {"index": 1}


def test_record_json_schema():
    rec = th.verify_saalschutz_classical(1, 1, 3, 2)
    out = rec.to_json()
    assert set(out) == {"identity", "inputs", "passed", "lhs", "rhs", "mismatch", "notes"}
    assert out["inputs"] == {"a": "1", "b": "1", "c": "3", "n": "2"}
    assert out["lhs"] == "3/2" and out["mismatch"] is None
    series = th.verify_ramanujan_extension(0, F(5, 7), order=4).to_json()
    assert isinstance(series["lhs"], list) and all(isinstance(x, str) for x in series["lhs"])


def test_series_mismatch_reports_first_degree():
    from hypersum.records import compare

    rec = compare("x", {}, TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 2, 4]))
    assert not rec.passed and rec.mismatch == {"index": 2}
