"""
Tests for the command-line interface.
"""

import json

import pytest
from click.testing import CliRunner

import cli
from qc_toolkit.core import congruence
from qc_toolkit.models.schemas import ProgressionCongruence, Provenance


@pytest.fixture
def runner():
    return CliRunner()


class TestExpand:
    def test_f1(self, runner):
        result = runner.invoke(cli.main, ["expand", "f1", "--order", "16"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].startswith("# f1 to O(q^16)")
        assert lines[1:4] == ["0\t1", "1\t-1", "2\t-1"]
        assert len(lines) == 17

    def test_named_series_mod(self, runner):
        result = runner.invoke(cli.main, ["expand", "d", "--order", "16", "--mod", "3"])
        assert result.exit_code == 0
        assert "2\t0" in result.output.splitlines()
        assert "mod 3" in result.output.splitlines()[0]

    def test_default_order(self, runner):
        result = runner.invoke(cli.main, ["expand", "cubic"])
        assert result.exit_code == 0
        assert len(result.output.splitlines()) == 21

    @pytest.mark.parametrize("args", [
        ["expand", "f1", "--order", "5"],
        ["expand", "f1/q"],
        ["expand", "sigma"],
        ["expand", "f1", "--mod", "1"],
    ])
    def test_errors_exit_1(self, runner, args):
        assert runner.invoke(cli.main, args).exit_code == 1


class TestScan:
    def test_counterexample(self, runner):
        result = runner.invoke(cli.main, ["scan", "d", "45", "1", "5", "--order", "2000"])
        assert result.exit_code == 1
        assert "counterexample" in result.output
        assert "index 0 at q^1, value 1" in result.output

    def test_help_states_exit_codes(self, runner):
        result = runner.invoke(cli.main, ["scan", "--help"])
        assert result.exit_code == 0
        text = " ".join(result.output.split())
        assert "Exits 0 when the progression vanishes" in text
        assert "exit code 2 of verify does not apply" in text

    def test_verified(self, runner):
        result = runner.invoke(cli.main, ["scan", "c", "27", "24", "9", "--order", "1000"])
        assert result.exit_code == 0
        assert "verified-to-order" in result.output

    def test_offset_must_be_below_modulus(self, runner):
        assert runner.invoke(cli.main, ["scan", "d", "3", "3", "3"]).exit_code == 1

    def test_unknown_family(self, runner):
        assert runner.invoke(cli.main, ["scan", "e", "3", "1", "3", "--order", "100"]).exit_code == 1


class TestOracle:
    def test_tcore_table(self, runner):
        result = runner.invoke(cli.main, ["oracle", "tcore(3)", "--max", "10", "--show"])
        assert result.exit_code == 0
        assert "3\t0" in result.output.splitlines()
        assert "oracle-tcore(3): verified-to-order" in result.output

    def test_no_oracle_for_b(self, runner):
        assert runner.invoke(cli.main, ["oracle", "b", "--max", "10"]).exit_code == 1


class TestVerify:
    def test_lemmas_with_outputs(self, runner, tmp_path):
        json_path = tmp_path / "lemmas.json"
        md_path = tmp_path / "lemmas.md"
        result = runner.invoke(cli.main, ["verify", "lemmas", "--order", "16", "--json", str(json_path),
                                          "--report", str(md_path)])
        assert result.exit_code == 0, result.output
        data = json.loads(json_path.read_text(encoding="utf-8"))
        assert len(data) == 35
        assert {"id", "paper_ref", "millis", "verdict", "order", "instances"} <= set(data[0])
        assert "Exit code: 0" in md_path.read_text(encoding="utf-8")

    def test_open_counterexample_exits_2(self, runner, monkeypatch):
        wrong = ProgressionCongruence("d", 45, 1, 5, Provenance("open: made up", conjectural=True))
        monkeypatch.setattr(congruence, "fixed_claims", lambda: [wrong])
        result = runner.invoke(cli.main, ["verify", "conjectures", "--order", "16"])
        assert result.exit_code == 2

    def test_bad_options(self, runner):
        assert runner.invoke(cli.main, ["verify", "lemmas", "--order", "8"]).exit_code == 1
        assert runner.invoke(cli.main, ["verify", "lemmas", "--primes", "five"]).exit_code == 1

    def test_unknown_suite(self, runner):
        assert runner.invoke(cli.main, ["verify", "everything"]).exit_code != 0


def test_version(runner):
    result = runner.invoke(cli.main, ["version"])
    assert result.exit_code == 0
    assert "q-congruence toolkit v0.1.0" in result.output
