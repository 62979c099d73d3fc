import csv
import io
import json
import subprocess
import sys

import pytest

from greenbound.cli import PRESETS, main, run, strip_timing


def ok(argv):
    report, code = run(argv)
    assert "error" not in report, report.get("error")
    return report, code


class TestGreenCheck:
    def test_random_corpus(self):
        report, code = ok(["green-check", "--seed", "1", "--trials", "25"])
        assert code == 0
        assert report["summary"]["violations"] == 0
        assert report["summary"]["trials"] == 25
        assert report["config"]["seed"] == 1 and report["config"]["field"] == "65521"

    def test_zero_trials(self):
        report, code = ok(["green-check", "--seed", "1", "--trials", "0"])
        assert code == 0 and report["records"] == []

    def test_zero_form(self):
        report, code = ok(["green-check", "--nvars", "2", "--form", "0,0", "--degree", "1"])
        assert code == 1
        assert report["summary"]["violations"] == 1
        rec = report["records"][0]
        assert rec["form"] == ["0", "0"] and rec["checks"][0] == {"d": 1, "lhs": 2, "rhs": 1, "holds": False}

    def test_explicit_ideal(self):
        report, code = ok(["green-check", "--nvars", "3", "--ideal", "x1^2 + x2*x3", "--form", "1,2,3", "--field", "Q"])
        assert code == 0
        assert report["records"][0]["ideal"] == ["x1^2 + x2*x3"]

    def test_seed_required(self):
        report, code = run(["green-check", "--trials", "3"])
        assert code == 2 and "seed" in report["error"]


class TestGrdVerify:
    def test_plane(self):
        report, code = ok(["grd-verify", "--nvars", "2", "--forms", "1,0;0,1", "--degree", "1", "--field", "Q"])
        assert code == 0 and report["records"][0]["grd"]["passed"]

    def test_char_two_preset(self):
        report, code = ok(["grd-verify", "--preset", "char2-veronese", "--seed", "3", "--trials", "4"])
        assert code == 1
        assert report["config"]["field"] == "2"
        for rec in report["records"]:
            conds = {v["condition"] for v in rec["grd"]["violations"]}
            assert {1, 2} <= conds
            assert not rec["green_bound"]["holds"]

    def test_sampled_forms(self):
        report, code = ok(["grd-verify", "--nvars", "3", "--ideal", "x1*x2 - x3^2", "--r", "4", "--degree", "2", "--seed", "5", "--stronger"])
        assert code == 0
        assert report["records"][0]["grd"]["stronger_holds"] is True

    def test_budget(self):
        report, code = run(["grd-verify", "--nvars", "2", "--r", "13", "--seed", "1"])
        assert code == 2 and "BudgetError" in report["error"]

    def test_needs_forms(self):
        report, code = run(["grd-verify", "--nvars", "2"])
        assert code == 2


class TestLexRestrict:
    def test_explicit(self):
        report, code = ok(["lex-restrict", "--hf", "1,2,1,1", "--nvars", "2"])
        assert code == 0
        rec = report["records"][0]
        assert rec["lex_generators"] == ["x1^2", "x1*x2"]
        assert [r["restricted"] for r in rec["degrees"]] == [1, 0, 0]

    def test_zero_ideal(self):
        report, code = ok(["lex-restrict", "--hf", "1,3,6,10", "--nvars", "3"])
        assert code == 0 and report["records"][0]["lex_generators"] == []

    def test_random(self):
        report, code = ok(["lex-restrict", "--seed", "4"])
        assert code == 0
        assert report["summary"] == {"trials": 100, "mismatches": 0, "failed": False}

    def test_invalid_hf(self):
        report, code = run(["lex-restrict", "--hf", "1,2,4", "--nvars", "2"])
        assert code == 2


class TestEakinSathaye:
    @pytest.mark.parametrize("problem", ["quadric", "segre22", "veronese22-z1z3", "veronese22-square"])
    def test_presets_verify(self, problem):
        report, code = ok(["eakin-sathaye", "--problem", problem, "--seed", "1"])
        assert code == 0
        rec = report["records"][0]
        assert rec["verified"] and rec["criterion_holds"]
        assert rec["trials_used"] <= 10

    def test_char_two(self):
        report, code = ok(["eakin-sathaye", "--problem", "char2-veronese", "--seed", "1"])
        assert code == 1
        assert not report["records"][0]["verified"]
        assert report["records"][0]["trials_used"] == 32
        assert any("characteristic 0" in w for w in report["warnings"])

    def test_criterion_refusal(self):
        report, code = run(["eakin-sathaye", "--problem", "veronese22", "--seed", "1"])
        assert code == 2 and "CriterionError" in report["error"]
        report, code = ok(["eakin-sathaye", "--problem", "veronese22", "--seed", "1", "--exploratory", "--max-trials", "4"])
        assert report["records"][0]["criterion_holds"] is False

    def test_explicit_toric(self):
        report, code = ok(["eakin-sathaye", "--toric", "chain:1,2", "--i", "1", "--p", "2", "--variant", "chain-partial-sums", "--seed", "2"])
        assert code == 0

    def test_missing_parameters(self):
        report, code = run(["eakin-sathaye", "--seed", "1"])
        assert code == 2

    def test_presets_listed(self):
        assert {"quadric", "segre22", "veronese22", "char2-veronese"} <= set(PRESETS)


class TestToricDemo:
    def test_segre(self):
        report, code = ok(["toric-demo", "--kind", "segre", "--n", "2,2", "--seed", "1"])
        rec = report["records"][0]
        assert code == 0
        assert rec["kernel"] == ["T12*T21 - T11*T22"]
        assert rec["degree1_dim"] == 4 and rec["kernel_vanishes"]
        assert rec["structured_sample"]["variant"] == "segre-product"

    def test_veronese(self):
        report, code = ok(["toric-demo", "--kind", "veronese", "--s", "2", "--b", "2"])
        assert report["records"][0]["kernel"] == ["Z2^2 - Z1*Z3"]
        assert report["records"][0]["structured_sample"] is None

    def test_chain(self):
        report, code = ok(["toric-demo", "--kind", "chain", "--n", "1,2", "--seed", "1"])
        assert report["records"][0]["kernel"] == []

    def test_fiber_cone(self):
        report, code = ok(["toric-demo", "--kind", "fiber-cone", "--generators", "2,0;1,1;0,2"])
        assert report["records"][0]["kernel"] == ["Z2^2 - Z1*Z3"]

    def test_bad_parameters(self):
        report, code = run(["toric-demo", "--kind", "chain", "--n", "2,1"])
        assert code == 2
        report, code = run(["toric-demo", "--kind", "veronese", "--s", "2"])
        assert code == 2


class TestConfigAndOutput:
    def test_config_file_and_override(self, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"seed": 7, "trials": 3, "max-vars": 2}))
        report, _ = ok(["green-check", "--config", str(cfg)])
        assert report["config"]["seed"] == 7 and report["summary"]["trials"] == 3
        assert all(r["nvars"] <= 2 for r in report["records"])
        report, _ = ok(["green-check", "--config", str(cfg), "--trials", "2"])
        assert report["summary"]["trials"] == 2 and report["config"]["seed"] == 7

    def test_bad_config(self, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text("[1, 2]")
        report, code = run(["green-check", "--config", str(cfg)])
        assert code == 2
        report, code = run(["green-check", "--config", str(tmp_path / "missing.json")])
        assert code == 2

    def test_out_and_csv(self, tmp_path):
        out = tmp_path / "r.csv"
        code = main(["green-check", "--seed", "2", "--trials", "3", "--format", "csv", "--out", str(out)])
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert len(rows) == 3
        assert {"trial", "form", "checks", "holds"} <= set(rows[0])
        assert json.loads(rows[0]["form"])

    def test_json_out(self, tmp_path):
        out = tmp_path / "r.json"
        assert main(["toric-demo", "--kind", "segre", "--n", "2,2", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["command"] == "toric-demo"

    def test_failure_records_replayable(self):
        report, _ = ok(["green-check", "--nvars", "2", "--form", "0,0", "--degree", "1"])
        rec = report["records"][0]
        assert "ideal" in rec and "form" in rec

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "greenbound", "toric-demo", "--kind", "veronese", "--s", "2", "--b", "2"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["records"][0]["kernel"] == ["Z2^2 - Z1*Z3"]

    def test_argparse_error(self):
        with pytest.raises(SystemExit) as exc:
            run(["toric-demo"])
        assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["green-check", "--seed", "9", "--trials", "5"],
        ["grd-verify", "--nvars", "3", "--r", "3", "--degree", "1", "--seed", "9", "--trials", "2"],
        ["lex-restrict", "--seed", "9", "--trials", "10"],
        ["eakin-sathaye", "--problem", "quadric", "--seed", "9", "--trials", "2"],
        ["toric-demo", "--kind", "segre-veronese", "--n", "2,2", "--b", "2,1", "--seed", "9"],
    ],
    ids=lambda a: a[0],
)
def test_replay_determinism(argv):
    a, ca = run(argv)
    b, cb = run(argv)
    assert ca == cb
    assert json.dumps(strip_timing(a), sort_keys=True) == json.dumps(strip_timing(b), sort_keys=True)
    assert "elapsed_seconds" in a
