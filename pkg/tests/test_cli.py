"""Command-line interface: documented invocations, serialization round-trips,
and exit-code conventions."""

import csv
import io
import json
import shutil
import subprocess
from fractions import Fraction

import pytest

from jacobilin import linearize_gencheb, linearize_jacobi, make_params
from jacobilin.cli import run_command

F = Fraction


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestDocumentedInvocations:
    def test_classify_between_regions(self, capsys):
        code, out, _ = run(capsys, "classify", "--alpha", "-33/100", "--beta", "-87/100")
        assert code == 0
        assert "label: V′\\V" in out
        assert "a = -1/5" in out and "b = 27/50" in out

    def test_linearize_mixed_parity(self, capsys):
        code, out, _ = run(
            capsys, "linearize", "--alpha", "1", "--beta", "0",
            "--family", "gencheb", "--m", "1", "--n", "2",
        )
        assert code == 0
        assert "k=1: 1/4" in out
        assert "k=3: 3/4" in out

    def test_scan_negative_b(self, capsys):
        code, out, _ = run(
            capsys, "scan", "--alpha", "-1/2", "--beta", "0",
            "--check", "nonneg", "--max-degree", "4",
        )
        assert code == 1
        assert "violation at (1,1,1) value -4/7" in out


class TestSerialization:
    def test_csv_round_trip(self, capsys):
        code, out, _ = run(
            capsys, "linearize", "--alpha", "1/2", "--beta", "1/4",
            "--m", "2", "--n", "3", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        cv = linearize_jacobi(make_params(F(1, 2), F(1, 4)), 2, 3)
        assert len(rows) == 5
        for row in rows:
            k = int(row["k"])
            v = F(int(row["value_num"]), int(row["value_den"]))
            assert v == cv[k]
            assert row["approx"] == f"{float(v):.15g}"

    def test_json_round_trip(self, capsys):
        code, out, _ = run(
            capsys, "linearize", "--alpha", "-33/100", "--beta", "-87/100",
            "--family", "gencheb", "--m", "4", "--n", "4", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "linearize"
        assert doc["params"] == {"alpha": "-33/100", "beta": "-87/100"}
        cv = linearize_gencheb(make_params(F(-33, 100), F(-87, 100)), 4, 4)
        got = {r["k"]: F(r["num"], r["den"]) for r in doc["payload"]["coefficients"]}
        assert got == {k: v for k, v in cv.items()}
        assert got[4] < 0

    def test_classify_json_verdict(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--alpha", "-33/100", "--beta", "-87/100", "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "V′\\V"
        assert doc["payload"]["in_Vprime"] is True
        assert doc["payload"]["in_V"] is False

    def test_scan_json_witness(self, capsys):
        code, out, _ = run(
            capsys, "scan", "--alpha", "-1/2", "--beta", "0",
            "--check", "nonneg", "--max-degree", "4", "--json",
        )
        assert code == 1
        doc = json.loads(out)
        assert doc["payload"]["witness"] == [1, 1, 1]
        assert doc["payload"]["witness_value"] == "-4/7"


class TestExitCodes:
    def test_malformed_rational(self, capsys):
        code, _, err = run(capsys, "classify", "--alpha", "0.5", "--beta", "0")
        assert code == 2
        assert "not an exact rational" in err

    def test_out_of_range_parameters(self, capsys):
        code, _, err = run(capsys, "classify", "--alpha", "-2", "--beta", "0")
        assert code == 2
        assert "alpha > -1" in err

    def test_missing_required_option(self, capsys):
        code, _, err = run(capsys, "classify", "--alpha", "1/2")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2

    def test_zero_denominator(self, capsys):
        code, _, err = run(capsys, "classify", "--alpha", "1/0", "--beta", "0")
        assert code == 2

    def test_compare_agreement(self, capsys):
        code, out, _ = run(
            capsys, "compare", "--alpha", "1/2", "--beta", "1/4", "--max-degree", "3",
        )
        assert code == 0
        assert "agree exactly" in out

    def test_witness_found_signals_one(self, capsys):
        code, out, _ = run(capsys, "witness", "--alpha", "-1/2", "--beta", "0",
                           "--max-degree", "8")
        assert code == 1
        assert "(m=3, n=3, k=2)" in out
        assert "-8/21" in out

    def test_witness_absent_signals_zero(self, capsys):
        code, out, _ = run(capsys, "witness", "--alpha", "0", "--beta", "0",
                           "--max-degree", "6")
        assert code == 0
        assert "no negative coefficient" in out

    def test_method_family_mismatch(self, capsys):
        code, _, err = run(
            capsys, "linearize", "--alpha", "1", "--beta", "0",
            "--family", "gencheb", "--m", "1", "--n", "1", "--method", "rahman",
        )
        assert code == 2


class TestVerifySubcommand:
    def test_recursion_consistency(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--alpha", "-1/4", "--beta", "-19/20",
            "--property", "recursion-consistency", "--m", "2", "--s", "1",
        )
        assert code == 0
        assert "PASS" in out

    def test_phi_alternation(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--alpha", "-33/100", "--beta", "-87/100",
            "--property", "phi-alternation", "--m", "3", "--s", "1",
        )
        assert code == 0

    def test_iota_zeros_below_threshold(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--alpha", "-81/200", "--beta", "-181/200",
            "--property", "iota-zeros", "--m", "2", "--s", "0",
        )
        assert code == 0
        assert "2 zero(s)" in out

    def test_pq_inequality_json(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--alpha", "-33/100", "--beta", "-87/100",
            "--property", "pq-inequality", "--m", "2", "--s", "0", "--json",
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "pass"

    def test_nec_identities(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--alpha", "1", "--beta", "0",
            "--property", "nec-identities", "--m", "2", "--s", "1",
        )
        assert code == 0


def test_console_script_installed():
    exe = shutil.which("jacobilin")
    assert exe is not None
    proc = subprocess.run(
        [exe, "classify", "--alpha", "-33/100", "--beta", "-87/100"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "V′\\V" in proc.stdout
