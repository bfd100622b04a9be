import io
import json

import pytest

from hypersum import cli
from hypersum.fuzz import IDENTITIES


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_extended_saalschutz_passes():
    code, text = run("verify", "extended-saalschutz", "--a", "1/2", "--b", "1/3", "--c", "3", "--f", "2", "--m", "1", "--n", "4")
    assert code == 0
    assert text.splitlines()[0].startswith("# extended-saalschutz: ")
    assert "PASS" in text and "lhs=1386/1235" in text


def test_verify_json_record():
    code, text = run("verify", "saalschutz-classical", "--a", "1", "--b", "1", "--c", "3", "--n", "2", "--json")
    assert code == 0
    record = json.loads(text)
    assert record == {
        "identity": "saalschutz-classical",
        "inputs": {"a": "1", "b": "1", "c": "3", "n": "2"},
        "passed": True,
        "lhs": "3/2",
        "rhs": "3/2",
        "mismatch": None,
        "notes": "",
    }


def test_show_polynomial_qhat():
    code, text = run("show-polynomial", "qhat", "--a", "1", "--b", "1", "--c", "4", "--f", "2", "--m", "2")
    assert code == 0
    assert text.strip() == "qhat(t) = 1 - 5/6*t + 1/6*t^2"


def test_show_polynomial_json_and_qvc():
    code, text = run("show-polynomial", "qvc", "--a", "1/3", "--c", "7/2", "--f", "2/5", "--m", "1", "--json")
    assert code == 0
    payload = json.loads(text)
    # Q_1(t) = 1 + (a - f) t / ((c - a - 1) f)
    assert payload["coefficients"] == ["1", "-1/13"]
    assert payload["degree_drop"] is False


def test_verify_with_polynomial_dump():
    code, text = run("verify", "extended-saalschutz", "--a", "1/2", "--b", "1", "--c", "4", "--f", "2", "--m", "2", "--n", "3", "--show-polynomial")
    assert code == 0 and "qhat(t) = 1 - " in text and "PASS" in text


def test_fuzz_ramanujan_all_pass():
    code, text = run("fuzz", "ramanujan-extension", "--p", "0", "--trials", "100", "--seed", "7", "--json")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 100
    assert all(json.loads(line)["passed"] for line in lines)


def test_fuzz_json_identical_across_threads():
    args = ("fuzz", "first-reduction", "--trials", "40", "--seed", "9", "--json")
    assert run(*args, "--threads", "1") == run(*args, "--threads", "8")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "saalschutz-classical", "--a", "0.5", "--b", "1", "--c", "3", "--n", "2"],
        ["verify", "saalschutz-classical", "--b", "1", "--c", "3", "--n", "2"],
        ["verify", "no-such-identity"],
        ["verify", "extended-saalschutz", "--a", "1", "--b", "1", "--c", "4", "--f", "2", "--n", "2"],
        ["verify", "saalschutz-classical", "--a", "1", "--b", "1", "--c", "3", "--n", "1/2"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(argv, out=io.StringIO())
    assert err.value.code == 2


def test_max_m_limit_is_usage_error():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "extended-saalschutz", "--a", "1", "--b", "1", "--c", "20", "--f", "2", "--m", "10", "--n", "1"], out=io.StringIO())
    assert err.value.code == 2
    code, _ = run("verify", "extended-saalschutz", "--a", "1", "--b", "1", "--c", "20", "--f", "2", "--m", "10", "--n", "1", "--max-m", "10")
    assert code == 0


def test_degenerate_exit_3_with_locus():
    code, text = run("verify", "saalschutz-classical", "--a", "1", "--b", "1", "--c", "-1", "--n", "3", "--json")
    assert code == 3
    payload = json.loads(text)
    assert payload["error"] == "DegenerateParameter" and payload["locus"]


def test_failing_identity_exits_1(monkeypatch):
    from hypersum import parametric

    original = parametric.coefficients_C

    def flipped(f_list, m_list):
        c = list(original(f_list, m_list))
        c[1] = -c[1]
        return c

    monkeypatch.setattr(parametric, "coefficients_C", flipped)
    code, text = run("verify", "extended-saalschutz", "--a", "1/2", "--b", "1/3", "--c", "3", "--f", "2", "--m", "1", "--n", "1")
    assert code == 1 and "FAIL" in text and "mismatch_at=1" in text


def test_every_identity_has_builder_and_anchor():
    assert set(cli.BUILDERS) == set(IDENTITIES)
    assert all(spec.anchor for spec in IDENTITIES.values())


def test_negative_fraction_with_equals_form():
    code, text = run("verify", "extended-vandermonde-chu", "--a", "1/3", "--c", "7/2", "--f", "2/5", "--m", "2", "--f=-1/3", "--m", "1", "--n", "6", "--json")
    assert code == 0
    assert json.loads(text)["lhs"] == "54791725/137918781"
