"""Command-line surface: formats, exit codes, determinism, round-trips."""

import json
import math

import pytest

from polyharmonic import verify_clifford_criticality
from polyharmonic.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, SweepSpec, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestHypersphereCommand:
    def test_table_mentions_radius(self, capsys):
        code, out, _ = run_cli(capsys, "hypersphere", "--r", "2", "--n", "3")
        assert code == EXIT_OK
        assert "0.707107" in out
        assert "proper_r_harmonic" in out

    def test_json_payload(self, capsys):
        code, out, _ = run_cli(capsys, "hypersphere", "--r", "9", "--format", "json")
        assert code == EXIT_OK
        body = json.loads(out)
        assert body["radius"] == pytest.approx(1.0 / 3.0, rel=1e-12)
        assert "0.333333333333" in out  # 12 significant digits

    def test_low_order_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "hypersphere", "--r", "1")
        assert code == EXIT_USAGE
        assert "r" in err

    def test_unparseable_flag_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["hypersphere", "--r", "abc"])
        assert exc.value.code == 2


class TestCliffordCommand:
    def test_three_rows_middle_minimal(self, capsys):
        code, out, _ = run_cli(capsys, "clifford", "--p", "1", "--q", "1", "--r", "5")
        assert code == EXIT_OK
        lines = [line for line in out.splitlines() if line and not line.startswith(("t ", "discriminant"))]
        assert len(lines) == 3
        assert "minimal" in lines[1]
        assert "proper_r_harmonic" in lines[0]

    def test_order_two_single_proper_row(self, capsys):
        code, out, _ = run_cli(capsys, "clifford", "--p", "1", "--q", "2", "--r", "2", "--format", "csv")
        assert code == EXIT_OK
        rows = out.strip().splitlines()
        assert len(rows) == 2  # header + one row
        assert "proper_r_harmonic" in rows[1]
        assert rows[1].startswith("0.5,")

    def test_balanced_low_order_minimal(self, capsys):
        code, out, _ = run_cli(capsys, "clifford", "--p", "2", "--q", "2", "--r", "3", "--format", "csv")
        assert code == EXIT_OK
        rows = out.strip().splitlines()
        assert len(rows) == 2
        assert "minimal" in rows[1]

    def test_json_round_trip_feeds_verifier(self, capsys):
        code, out, _ = run_cli(capsys, "clifford", "--p", "1", "--q", "2", "--r", "10", "--format", "json")
        assert code == EXIT_OK
        body = json.loads(out)
        assert body["discriminant"] == pytest.approx(1404.0)
        residuals = []
        for sol in body["solutions"]:
            report = verify_clifford_criticality(sol["t"], 1, 2, 10)
            assert report.passed
            residuals.append(report.max_residual)
        # a second pass over the parsed values reproduces identical residuals
        again = [verify_clifford_criticality(sol["t"], 1, 2, 10).max_residual for sol in body["solutions"]]
        assert residuals == again


class TestSweepCommand:
    def test_csv_contract(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--p", "1", "--q", "2", "--r", "3:12", "--format", "csv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "p,q,r,count,disc,t1,t2,t3"
        assert len(lines) == 11
        counts = [int(line.split(",")[3]) for line in lines[1:]]
        assert sorted(set(counts)) == [1, 3]  # transitions once the certificate turns positive

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "sweep", "--p", "1:2", "--q", "1:2", "--r", "2:6", "--format", "csv")
        _, second, _ = run_cli(capsys, "sweep", "--p", "1:2", "--q", "1:2", "--r", "2:6", "--format", "csv")
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "rows.csv"
        code, out, _ = run_cli(capsys, "sweep", "--p", "1", "--q", "1", "--r", "2:4", "--format", "csv", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        content = target.read_text()
        assert content.startswith("p,q,r,count,disc,t1,t2,t3\n")

    def test_unwritable_out_is_io_error(self, capsys):
        code, _, err = run_cli(
            capsys, "sweep", "--p", "1", "--q", "1", "--r", "2:3", "--format", "csv",
            "--out", "/nonexistent-dir/rows.csv",
        )
        assert code == EXIT_IO
        assert "cannot write" in err

    def test_empty_range_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--p", "3:1", "--q", "1", "--r", "2:3")
        assert code == EXIT_USAGE
        assert "empty" in err

    def test_bad_range_syntax_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--p", "x:y", "--q", "1", "--r", "2:3"])
        assert exc.value.code == 2

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            SweepSpec((1, 2), (1, 1), (1, 3))  # r must start at 2
        with pytest.raises(ValueError):
            SweepSpec((0, 2), (1, 1), (2, 3))
        with pytest.raises(ValueError):
            SweepSpec((1, 2), (1, 1), (2, 3), output_format="yaml")


class TestVerifyCommand:
    def test_fast_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "energy")
        assert code == EXIT_OK
        assert "PASS" in out
        assert "checks passed" in out

    def test_impossible_tolerance_fails_with_named_check(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "energy", "--tol", "1e-30")
        assert code == EXIT_VERIFY_FAILED
        assert "FAIL" in out
        assert "energy." in out

    def test_unknown_suite_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "bogus"])
        assert exc.value.code == 2

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "energy", "--format", "json")
        assert code == EXIT_OK
        body = json.loads(out)
        assert body["passed"] is True


class TestMisc:
    def test_missing_subcommand_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_remote_url_unreachable_is_io_error(self, capsys):
        code, _, err = run_cli(
            capsys, "--url", "http://127.0.0.1:1", "hypersphere", "--r", "2"
        )
        assert code == EXIT_IO
        assert "service" in err or "error" in err
