import json
import subprocess
import sys

import pytest

from touchard.cli import main
from touchard.exact_core import bell


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSeq:
    def test_bell(self, capsys):
        code, out, _ = run(capsys, "seq", "bell", "--count", "6")
        assert code == 0
        assert [line.split("\t")[1] for line in out.splitlines()] == ["1", "1", "2", "5", "15", "52"]

    def test_vn_json(self, capsys):
        code, out, _ = run(capsys, "seq", "vn", "--count", "5", "--format", "json")
        assert code == 0 and json.loads(out)["values"] == ["1", "0", "1", "1", "4"]

    def test_bellmod_csv(self, capsys):
        code, out, _ = run(capsys, "seq", "bellmod", "--p", "2", "--count", "6", "--format", "csv")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "n,value"
        assert [line.split(",")[1] for line in lines[1:]] == ["1", "1", "0", "1", "1", "0"]

    def test_stirling_row(self, capsys):
        code, out, _ = run(capsys, "seq", "rstirling2", "--n", "3", "--r", "1", "--format", "json")
        assert code == 0 and json.loads(out)["values"] == ["1", "7", "6", "1"]

    def test_large_values_are_exact(self, capsys):
        _, out, _ = run(capsys, "seq", "bell", "--count", "60", "--format", "json")
        assert json.loads(out)["values"][59] == str(bell(59))

    @pytest.mark.parametrize(
        "argv",
        [
            ("seq", "catalan"),
            ("seq", "bellmod", "--count", "4"),
            ("seq", "bellmod", "--p", "4"),
            ("seq", "rstirling1", "--r", "-1"),
            ("seq", "bell", "--count", "0"),
        ],
    )
    def test_invalid_params_exit_2(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "bell.csv"
        assert main(["seq", "bell", "--count", "3", "--format", "csv", "--out", str(target)]) == 0
        assert target.read_text() == "n,value\n0,1\n1,1\n2,2\n"


class TestVerify:
    def test_selected_kinds_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--kinds", "TOUCHARD", "BTC", "COR1")
        report = json.loads(out)
        assert code == 0 and report["status"] == "PASS"
        assert [c["kind"] for c in report["checks"]] == ["TOUCHARD", "BTC", "COR1"]
        assert set(report) == {"version", "config", "checks", "status"}

    def test_mutation_exits_1(self, capsys):
        code, out, _ = run(capsys, "verify", "--kinds", "TOUCHARD", "--mutation", "WRONG_COEFF")
        assert code == 1 and json.loads(out)["status"] == "FAIL"

    def test_malformed_config_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "verify", "--config", str(bad))
        assert code == 2 and err

    @pytest.mark.parametrize(
        "config",
        [
            {"checks": ["NOPE"]},
            {"checks": ["BTC"], "grids": {"BTC": {"p": [4]}}},
            {"checks": ["BTC"], "grids": {"BTC": {"n": [5, 1]}}},
            {"checks": ["BTC"], "grids": {"BTC": {"q": [1, 2]}}},
            {"checks": ["BTC"], "unknown": 1},
        ],
    )
    def test_invalid_config_exits_2(self, capsys, tmp_path, config):
        path = tmp_path / "c.json"
        path.write_text(json.dumps(config))
        code, _, _ = run(capsys, "verify", "--config", str(path))
        assert code == 2

    def test_config_file(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"checks": ["BTC"], "grids": {"BTC": {"p": [3], "n": [0, 30]}}, "periods": {}}))
        code, out, _ = run(capsys, "verify", "--config", str(path))
        report = json.loads(out)
        assert code == 0 and report["checks"][0]["tested"] == 28 and report["checks"][0]["skipped"] == 3

    def test_failure_entries_are_reproducible(self, capsys):
        code, out, _ = run(capsys, "verify", "--kinds", "THM_BTD")
        assert code == 1
        failure = json.loads(out)["checks"][0]["failures"][0]
        assert {"point", "lhs", "rhs"} <= set(failure)

    def test_csv_rows(self, capsys):
        code, out, _ = run(capsys, "verify", "--kinds", "COR1", "--format", "csv")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 1 + 40 * 7

    def test_byte_identical(self, capsys):
        _, first, _ = run(capsys, "verify", "--kinds", "AUX3", "SUN_ZAGIER", "--with-periods")
        _, second, _ = run(capsys, "verify", "--kinds", "AUX3", "SUN_ZAGIER", "--with-periods")
        assert first == second

    def test_timings_are_opt_in(self, capsys):
        _, out, _ = run(capsys, "verify", "--kinds", "COR1", "--timings")
        assert "COR1" in json.loads(out)["timing"]

    def test_default_run_reflects_literal_factorial_side(self, capsys):
        # only the three kinds carrying the literal factorial-sum expression fail
        code, out, _ = run(capsys, "verify")
        report = json.loads(out)
        failing = {c["kind"] for c in report["checks"] if c["status"] != "PASS"}
        assert failing == {"THM_SUMD", "SZ_NEW", "THM_BTD"}
        assert code == 1


class TestPeriod:
    def test_minimal(self, capsys):
        code, out, _ = run(capsys, "period", "--p", "3", "--minimal")
        entry = json.loads(out)["checks"][0]
        assert code == 0 and entry["analysis"]["minimal_period"] == "13"

    def test_digit_sum(self, capsys):
        code, out, _ = run(capsys, "period", "--p", "5", "--falsify-digit-sum")
        entry = json.loads(out)["checks"][0]
        assert code == 0 and entry["periods_found"] == [] and entry["candidates_examined"] == 121

    def test_hall(self, capsys):
        code, out, _ = run(capsys, "period", "--p", "2", "--hall")
        assert code == 0 and json.loads(out)["status"] == "PASS"

    def test_shift(self, capsys):
        code, _, _ = run(capsys, "period", "--p", "3", "--shift", "1")
        assert code == 0

    def test_unknown_minimal_period_is_not_pass(self, capsys):
        code, out, _ = run(capsys, "period", "--p", "11", "--minimal")
        assert code == 1 and json.loads(out)["status"] == "INCOMPLETE"

    @pytest.mark.parametrize("argv", [("period", "--p", "4"), ("period", "--p", "11", "--hall"), ("period",)])
    def test_bad_input_exits_2(self, capsys, argv):
        code = None
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
        capsys.readouterr()
        assert code == 2


class TestFalsify:
    def test_all_mutations_caught(self, capsys):
        code, out, _ = run(capsys, "falsify", "--kinds", "TOUCHARD", "BTC", "COR1")
        report = json.loads(out)
        assert code == 0 and len(report["probes"]) == 9
        assert all(p["probe_status"] == "FAIL" for p in report["probes"])

    def test_unknown_mutation_exits_2(self, capsys):
        code, _, _ = run(capsys, "falsify", "--mutations", "FLIP")
        assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "touchard", "seq", "derangement", "--count", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert [line.split("\t")[1] for line in proc.stdout.splitlines()] == ["1", "0", "1", "2", "9"]


def test_usage_error_exits_2():
    proc = subprocess.run([sys.executable, "-m", "touchard", "verify", "--bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
