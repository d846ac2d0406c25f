"""Command-line behavior: outputs, formats, exit codes, determinism."""

import csv
import io
import json
import math

import pytest

from gapforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestScan:
    def test_limit_100(self, capsys):
        code, out = run(capsys, "scan", "--limit", "100")
        assert code == 0
        rows = parse_csv(out)
        assert [(r["gap"], r["lower_prime"]) for r in rows] == [
            ("1", "2"), ("2", "3"), ("4", "7"), ("6", "23"), ("8", "89"),
        ]

    def test_limit_3(self, capsys):
        code, out = run(capsys, "scan", "--limit", "3")
        assert code == 0
        assert [r["gap"] for r in parse_csv(out)] == ["1", "2"]

    def test_precondition_exit_2(self, capsys):
        code, _ = run(capsys, "scan", "--limit", "2")
        assert code == 2

    def test_json_csv_parity(self, capsys):
        _, out_csv = run(capsys, "scan", "--limit", "1000")
        _, out_json = run(capsys, "scan", "--limit", "1000", "--format", "json")
        csv_rows = [
            {"index": int(r["index"]), "gap": int(r["gap"]), "lower_prime": int(r["lower_prime"])}
            for r in parse_csv(out_csv)
        ]
        assert csv_rows == json.loads(out_json)

    def test_threads_do_not_change_output(self, capsys):
        _, a = run(capsys, "scan", "--limit", "200000")
        _, b = run(capsys, "scan", "--limit", "200000", "--threads", "4")
        assert a == b

    def test_checkpoint_resume_byte_identical(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("GAPFORGE_SEGMENT_BITS", "16")
        cp = tmp_path / "scan.cp"
        _, full = run(capsys, "scan", "--limit", "400000")
        code, _ = run(capsys, "scan", "--limit", "120000", "--checkpoint", str(cp))
        assert code == 0 and cp.exists()
        _, resumed = run(capsys, "scan", "--limit", "400000", "--checkpoint", str(cp))
        assert resumed == full

    def test_checkpoint_beyond_limit_exit_2(self, capsys, tmp_path):
        cp = tmp_path / "scan.cp"
        run(capsys, "scan", "--limit", "120000", "--checkpoint", str(cp))
        code, _ = run(capsys, "scan", "--limit", "1000", "--checkpoint", str(cp))
        assert code == 2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "records.csv"
        code, out = run(capsys, "scan", "--limit", "100", "--out", str(target))
        assert code == 0 and out == ""
        assert len(parse_csv(target.read_text())) == 5


class TestVerifyTable:
    def test_default_model_passes(self, capsys):
        code, out = run(capsys, "verify-table")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 75
        # one-decimal presentation of the recomputed column
        assert rows[0]["u_recomputed"] == "-8.2"
        assert rows[10]["u_recomputed"] == "238.2"
        assert all(r["violated"] == "False" for r in rows if int(r["lower_prime"]) >= 3)

    def test_cramer_fails_on_small_primes(self, capsys):
        code, out = run(capsys, "verify-table", "--model", "CRAMER")
        assert code == 1
        bad = [r["lower_prime"] for r in parse_csv(out) if r["violated"] == "True"]
        assert bad == ["2", "3", "7"]

    def test_corrupted_fixture_detected(self, capsys, tmp_path):
        path = tmp_path / "fixture.csv"
        path.write_text(
            "index,gap,lower_prime,u_paper\n1,1,2,-8.2\n2,2,3,99.9\n"
        )
        code, _ = run(capsys, "verify-table", "--fixture", str(path))
        assert code == 1

    def test_empty_fixture_passes_vacuously(self, capsys, tmp_path):
        path = tmp_path / "fixture.csv"
        path.write_text("index,gap,lower_prime,u_paper\n")
        code, out = run(capsys, "verify-table", "--fixture", str(path))
        assert code == 0
        assert parse_csv(out) == []

    def test_unknown_model_exit_2(self, capsys):
        code, _ = run(capsys, "verify-table", "--model", "NOPE")
        assert code == 2


class TestZeta:
    def test_one_zero_below_15(self, capsys):
        code, out = run(capsys, "zeta", "--T", "15")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 1
        assert abs(float(rows[0]["gamma"]) - 14.1347) < 1e-3

    def test_count_report(self, capsys):
        code, out = run(capsys, "zeta", "--T", "100", "--report", "count")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["exact"] == "29"
        assert abs(float(row["s_of_t"])) < 1.5

    def test_spacing_report(self, capsys):
        code, out = run(capsys, "zeta", "--T", "100", "--report", "spacing")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 28
        assert all(float(r["delta"]) > 0 for r in rows)

    def test_bands_report(self, capsys):
        code, out = run(capsys, "zeta", "--T", "300", "--report", "bands")
        assert code == 0
        rows = parse_csv(out)
        assert rows
        for r in rows:
            assert 0.0 <= float(r["fraction"]) <= 1.0

    def test_height_precondition(self, capsys):
        assert run(capsys, "zeta", "--T", "5")[0] == 2
        assert run(capsys, "zeta", "--T", "20000")[0] == 2

    def test_json_csv_parity(self, capsys):
        _, out_csv = run(capsys, "zeta", "--T", "50")
        _, out_json = run(capsys, "zeta", "--T", "50", "--format", "json")
        csv_rows = parse_csv(out_csv)
        json_rows = json.loads(out_json)
        assert len(csv_rows) == len(json_rows)
        for c, j in zip(csv_rows, json_rows):
            assert float(c["gamma"]) == j["gamma"]


class TestDuality:
    def test_with_imported_zero_table(self, capsys, tmp_path):
        path = tmp_path / "zeros.csv"
        code, _ = run(capsys, "zeta", "--T", "60", "--out", str(path))
        assert code == 0
        code, out = run(capsys, "duality", "--n", "2,10", "--zeros", str(path))
        assert code == 0
        rows = parse_csv(out)
        assert [r["n"] for r in rows] == ["2", "10"]
        assert [r["p_n"] for r in rows] == ["3", "29"]

    def test_computed_zeros(self, capsys):
        code, out = run(capsys, "duality", "--n", "2")
        assert code == 0
        assert abs(float(parse_csv(out)[0]["gamma_n"]) - 21.022) < 1e-3

    def test_missing_ordinal_exit_2(self, capsys, tmp_path):
        path = tmp_path / "zeros.csv"
        run(capsys, "zeta", "--T", "20", "--out", str(path))
        code, _ = run(capsys, "duality", "--n", "50", "--zeros", str(path))
        assert code == 2


class TestConstructFactorBoundInterval:
    def test_construct(self, capsys):
        code, out = run(capsys, "construct", "--m", "5")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["start"] == "122" and row["length"] == "4"
        assert row["witnesses_ok"] == "True" and row["satisfied"] == "True"

    def test_factor_line_format(self, capsys):
        code, out = run(capsys, "factor", "1425172824437699412")
        assert code == 0
        assert parse_csv(out)[0]["factorization"] == (
            "1425172824437699412 = 2^2 * 3^3 * 43 * 601 * 510623560373"
        )

    def test_factor_json(self, capsys):
        _, out = run(capsys, "factor", "12", "--format", "json")
        assert json.loads(out)[0]["factors"] == [[2, 2], [3, 1]]

    def test_bound_table_value(self, capsys):
        code, out = run(capsys, "bound", "PAPER_RH", "9551")
        assert code == 0
        assert parse_csv(out)[0]["value"] == "238.2"

    def test_bound_log_p(self, capsys):
        code, out = run(capsys, "bound", "PAPER_RH", "--log-p", "199958.4")
        assert code == 0
        value = float(parse_csv(out)[0]["value"])
        assert abs(value - 2.06e10) / 2.06e10 < 0.01

    def test_bound_full_precision_in_json(self, capsys):
        _, out = run(capsys, "bound", "PAPER_RH", "9551", "--format", "json")
        assert json.loads(out)[0]["value"] == pytest.approx(238.2047, abs=1e-3)

    def test_bound_requires_one_entry(self, capsys):
        assert run(capsys, "bound", "PAPER_RH")[0] == 2
        assert run(capsys, "bound", "PAPER_RH", "7", "--log-p", "2.0")[0] == 2

    def test_interval(self, capsys):
        code, out = run(capsys, "interval", "--d", "4")
        assert code == 0
        row = parse_csv(out)[0]
        assert float(row["lo"]) < 7 < float(row["hi"])
        assert float(row["lo"]) == pytest.approx(1.817, abs=1e-3)


class TestStats:
    def test_small_run(self, capsys):
        code, out = run(capsys, "stats", "--limit", "10000", "--m", "0",
                        "--lambda-grid", "0,1,2")
        assert code == 0
        rows = parse_csv(out)
        assert [float(r["lambda"]) for r in rows] == [0.0, 1.0, 2.0]
        assert float(rows[0]["empirical"]) == 1.0
        assert float(rows[1]["poisson_model"]) == pytest.approx(math.exp(-1), rel=1e-12)

    def test_json_csv_parity(self, capsys):
        args = ("stats", "--limit", "10000", "--m", "1", "--lambda-grid", "0.5,1.5")
        _, out_csv = run(capsys, *args)
        _, out_json = run(capsys, *args, "--format", "json")
        for c, j in zip(parse_csv(out_csv), json.loads(out_json)):
            assert float(c["empirical"]) == j["empirical"]
            assert float(c["poisson_model"]) == j["poisson_model"]

    def test_limit_floor_exit_2(self, capsys):
        assert run(capsys, "stats", "--limit", "100", "--lambda-grid", "1")[0] == 2
