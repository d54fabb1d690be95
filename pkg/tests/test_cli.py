"""Command-line interface: output formats, exit codes, determinism."""

import json

import pytest

from qmock.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


SMALL_CORPUS = """
[identity pass-1]
anchor = "pentagonal equals itself"
order = 12
lhs = Jm(1)
rhs = subq(Jm(1), 1)

[identity pass-2]
anchor = "geometric series"
order = 12
lhs = 1/(1-q)
rhs = poch_inf(q^2, q)/Jm(1)
"""

FAILING_CORPUS = SMALL_CORPUS + """
[identity planted]
anchor = "off by q^5"
order = 10
lhs = Jm(1)
rhs = Jm(1) + q^5
"""


class TestExpand:
    def test_psi_text(self, capsys):
        code, out, _ = run(capsys, "expand", "psi(q)", "--order", "5")
        assert code == 0
        assert out.strip() == "q + q^2 + q^3 + 2*q^4"

    def test_zero_with_tail_marker(self, capsys):
        code, out, _ = run(capsys, "expand", "j(q,q)", "--order", "10")
        assert code == 0
        assert out.strip() == "0 (+O(q^10))"

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "expand", "q^(1/", "--order", "5")
        assert code == 2
        assert "syntax" in err

    def test_eval_error_exit_3(self, capsys):
        code, _, err = run(capsys, "expand", "m(1,q,1)", "--order", "5")
        assert code == 3
        assert "DegenerateZ" in err

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "expand", "1/(2-2*q)", "--order", "3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["precision"] == [3, 1]
        assert data["terms"] == [[0, 1, 1, 2, 0, 1], [1, 1, 1, 2, 0, 1], [2, 1, 1, 2, 0, 1]]

    def test_fractional_exponent_json(self, capsys):
        code, out, _ = run(capsys, "expand", "q^(1/2)", "--order", "1", "--json")
        data = json.loads(out)
        assert data["terms"] == [[1, 2, 1, 1, 0, 1]]


class TestVerify:
    def test_pass_exit_0(self, capsys):
        code, out, _ = run(
            capsys, "verify", "2*q^2*phibar0(q^2)", "psi(q)+negq(psi(q))", "--order", "50"
        )
        assert code == 0
        assert out.startswith("PASS")

    def test_fail_exit_1(self, capsys):
        code, out, _ = run(capsys, "verify", "Jm(1)", "Jm(2)", "--order", "10")
        assert code == 1
        assert "q^1" in out

    def test_error_exit_3(self, capsys):
        code, out, _ = run(capsys, "verify", "m(1,q,1)", "0", "--order", "10")
        assert code == 3

    def test_syntax_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "Jm(1", "Jm(1)", "--order", "10")
        assert code == 2

    def test_env_default_order(self, capsys, monkeypatch):
        monkeypatch.setenv("QMOCK_DEFAULT_ORDER", "4")
        code, out, _ = run(capsys, "expand", "psi(q)")
        assert code == 0
        assert out.strip() == "q + q^2 + q^3"


class TestCorpus:
    def test_all_pass_exit_0(self, capsys, tmp_path):
        path = tmp_path / "small.qid"
        path.write_text(SMALL_CORPUS)
        code, out, _ = run(capsys, "corpus", str(path))
        assert code == 0
        assert "PASS 2 / FAIL 0 / ERROR 0" in out

    def test_planted_failure_exit_1(self, capsys, tmp_path):
        path = tmp_path / "fail.qid"
        path.write_text(FAILING_CORPUS)
        code, out, _ = run(capsys, "corpus", str(path))
        assert code == 1
        assert "PASS 2 / FAIL 1 / ERROR 0" in out

    def test_syntax_error_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.qid"
        path.write_text("[identity x]\nanchor = broken\n")
        code, _, err = run(capsys, "corpus", str(path))
        assert code == 2

    def test_order_override(self, capsys, tmp_path):
        path = tmp_path / "fail.qid"
        path.write_text(FAILING_CORPUS)
        # below the planted defect the failing stanza passes
        code, out, _ = run(capsys, "corpus", str(path), "--order", "4")
        assert code == 0

    def test_json_stable_deterministic(self, capsys, tmp_path):
        path = tmp_path / "small.qid"
        path.write_text(SMALL_CORPUS)
        code1, out1, _ = run(capsys, "corpus", str(path), "--json", "--stable")
        code2, out2, _ = run(capsys, "corpus", str(path), "--json", "--stable")
        assert code1 == code2 == 0
        assert out1 == out2
        reports = json.loads(out1)
        assert [r["id"] for r in reports] == ["pass-1", "pass-2"]
        assert all("elapsed_ms" not in r for r in reports)

    def test_jobs_do_not_change_reports(self, capsys, tmp_path):
        path = tmp_path / "small.qid"
        path.write_text(FAILING_CORPUS)
        code1, out1, _ = run(capsys, "corpus", str(path), "--json", "--stable", "--jobs", "1")
        code2, out2, _ = run(capsys, "corpus", str(path), "--json", "--stable", "--jobs", "2")
        assert (code1, out1) == (code2, out2)
