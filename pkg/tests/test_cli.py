import json

import pytest

from semigroup_forge import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestInvariants:
    def test_two_three(self, capsys):
        code, out, _ = run(capsys, "invariants", "--gens", "2,3", "--format", "json")
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert row["frobenius"] == 1 and row["type"] == 1 and row["genus"] == 1

    def test_family_member(self, capsys):
        code, out, _ = run(capsys, "invariants", "--gens", "35,36,41,42", "--format", "json", "--show-apery")
        row = json.loads(out)["rows"][0]
        assert code == 0
        assert row["frobenius"] == 174 and row["type"] == 10
        assert len(row["apery"]) == 35

    def test_schema(self, capsys):
        _, out, _ = run(capsys, "invariants", "--gens", "3,5", "--format", "json")
        data = json.loads(out)
        assert set(data) == {"command", "params", "rows", "discrepancies"}

    def test_not_coprime(self, capsys):
        code, _, err = run(capsys, "invariants", "--gens", "4,6")
        assert code == 2
        assert "not coprime" in err

    def test_garbage(self, capsys):
        code, _, _ = run(capsys, "invariants", "--gens", "a,b")
        assert code == 2

    def test_text(self, capsys):
        code, out, _ = run(capsys, "invariants", "--gens", "3,4,5")
        assert code == 0
        assert "frobenius" in out and "2" in out


class TestIdeal:
    def test_three_four_five(self, capsys):
        code, out, _ = run(capsys, "ideal", "--gens", "3,4,5", "--format", "json")
        row = json.loads(out)["rows"][0]
        assert code == 0
        assert row["mu"] == 3 and row["certified"] and row["minimal"]
        assert len(row["generating_set"]) == 3

    def test_budget_flag(self, capsys):
        code, _, err = run(capsys, "ideal", "--gens", "35,36,41,42", "--max-spairs", "1")
        assert code == 3
        assert "resource limit" in err


class TestSweep:
    def test_e4(self, capsys):
        code, out, _ = run(capsys, "sweep", "--e", "4", "--i-range", "2..4", "--format", "json", "--threads", "1")
        data = json.loads(out)
        assert code == 0
        assert [r["mu"] for r in data["rows"]] == [12, 14, 16]
        assert [r["type"] for r in data["rows"]] == [10, 12, 14]
        assert data["params"] == {"e": 4, "i": [2, 3, 4]}

    def test_verify_e5(self, capsys):
        code, out, _ = run(capsys, "verify", "--e", "5", "--i", "2", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["params"] == {"e": 5, "i": 2}
        row = data["rows"][0]
        assert row["mu"] == 19 and row["type"] == 15 and row["minimal"]

    def test_unsupported_e(self, capsys):
        code, _, err = run(capsys, "verify", "--e", "6", "--i", "2")
        assert code == 2
        assert "UnsupportedE" in err

    def test_verify_rejects_range(self, capsys):
        code, _, _ = run(capsys, "verify", "--e", "4", "--i", "2..3")
        assert code == 2

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "--e", "4", "--i-range", "2,3", "--format", "csv", "--threads", "1")
        assert code == 0
        assert "\r" not in out
        lines = out.splitlines()
        assert lines[0].startswith("e,i,n,")
        assert len(lines) == 3

    def test_deterministic_bytes(self, capsys):
        argv = ("sweep", "--e", "4", "--i-range", "2..3", "--format", "json")
        _, first, _ = run(capsys, *argv, "--threads", "1")
        _, second, _ = run(capsys, *argv, "--threads", "2")
        assert first == second

    def test_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.BUDGET_ENV, "spairs=1")
        code, out, _ = run(capsys, "verify", "--e", "4", "--i", "2", "--format", "json")
        assert code == 3
        assert json.loads(out)["rows"][0]["error"]

    def test_bad_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.BUDGET_ENV, "bogus=3")
        code, _, _ = run(capsys, "verify", "--e", "4", "--i", "2")
        assert code == 2

    def test_mismatch_exit(self, capsys, monkeypatch):
        import importlib
        fam = importlib.import_module("semigroup_forge.family")
        monkeypatch.setattr(fam, "closed_pf_e4", lambda p: frozenset())
        code, out, _ = run(capsys, "verify", "--e", "4", "--i", "2", "--threads", "1")
        assert code == 1
        assert "DISCREPANCY" in out


@pytest.mark.parametrize("text,expected", [("3", [3]), ("2..4", [2, 3, 4]), ("2,5", [2, 5])])
def test_parse_range(text, expected):
    assert cli.parse_range(text) == expected


def test_parse_budget():
    assert cli.parse_budget("42")["spairs"] == 42
    assert cli.parse_budget("spairs=5,nodes=7") == {"spairs": 5, "nodes": 7}
