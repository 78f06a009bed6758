import csv
import io
import json
import math

import pytest

from foxh.cli import Command, OutputFormat, main, parse_config
from foxh.cli.commands import EXIT_EMPTY_REGION, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE
from foxh.exceptions import UsageError

EXP_SPEC = {"m": 1, "n": 0, "upper": [], "lower": [[0, 0, 1]]}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def assert_repeatable(tmp_path, *argv, fmt="json"):
    path = tmp_path / f"report.{fmt}"
    args = [*argv, "--format", fmt, "--out", str(path)]
    code = main(args)
    first = path.read_bytes()
    assert first
    assert main(args) == code
    assert path.read_bytes() == first
    return code


class TestParseConfig:
    """ 명령행 해석 """

    def test_verify_defaults(self):
        config = parse_config(["verify", "--identity", "MAIN", "--lambda", "0.5", "--delta", "0.4"])
        assert config.command is Command.VERIFY
        assert config.lam == 0.5
        assert config.grid == [(0.4, 0.0), (0.8, 0.0)]
        assert config.tol == 1e-6
        assert config.format is OutputFormat.JSON

    def test_grid_is_sorted_and_unique(self):
        config = parse_config(
            ["eval", "--spec", "x.json", "--moduli", "2,1,2", "--phases", "0.1,-0.1"]
        )
        assert config.grid == [(1.0, -0.1), (1.0, 0.1), (2.0, -0.1), (2.0, 0.1)]

    def test_eval_tol_drives_quadrature(self):
        config = parse_config(["eval", "--spec", "x.json", "--tol", "1e-12"])
        assert config.quadrature.rel_tol == 1e-12

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["eval"],
            ["eval", "--spec", "x.json", "--moduli", "a,b"],
            ["eval", "--spec", "x.json", "--moduli", "-1"],
            ["eval", "--spec", "x.json", "--tol", "0"],
            ["verify", "--identity", "MAINX"],
            ["gammacheck", "--count", "-1"],
        ],
    )
    def test_usage_errors(self, argv):
        with pytest.raises(UsageError):
            parse_config(argv)

    def test_to_dict(self):
        data = parse_config(["gammacheck"]).to_dict()
        assert data["command"] == "gammacheck"
        assert data["format"] == "json"
        assert data["quadrature"]["rel_tol"] > 0


class TestEval:
    """ eval 명령 """

    def test_exponential(self, capsys, spec_file):
        code, out, _ = run(capsys, "eval", "--spec", spec_file(EXP_SPEC))
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["failed"] == 0
        re_, im_ = report["points"][0]["value"]
        assert re_ == pytest.approx(math.exp(-1), abs=1e-10)
        assert im_ == pytest.approx(0, abs=1e-12)
        assert report["config"]["spec_path"].endswith("spec.json")

    def test_series_method(self, capsys, spec_file):
        code, out, _ = run(
            capsys, "eval", "--spec", spec_file(EXP_SPEC), "--method", "series", "--moduli", "2"
        )
        assert code == EXIT_OK
        assert json.loads(out)["points"][0]["value"][0] == pytest.approx(math.exp(-2), abs=1e-10)

    def test_malformed_json(self, capsys, spec_file):
        code, out, err = run(capsys, "eval", "--spec", spec_file("{not json"))
        assert code == EXIT_USAGE
        assert out == ""
        assert err

    def test_invalid_spec(self, capsys, spec_file):
        spec = {"m": 1, "n": 0, "upper": [], "lower": [[0, 0, -1]]}
        code, _, err = run(capsys, "eval", "--spec", spec_file(spec))
        assert code == EXIT_USAGE
        assert err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "eval", "--spec", str(tmp_path / "absent.json"))
        assert code == EXIT_USAGE

    def test_point_outside_sector(self, capsys, spec_file):
        code, out, _ = run(capsys, "eval", "--spec", spec_file(EXP_SPEC), "--phases", "0,2.4")
        assert code == EXIT_NUMERIC
        report = json.loads(out)
        assert report["failed"] == 1
        failed = [x for x in report["points"] if "error" in x]
        assert failed[0]["phase"] == 2.4
        assert failed[0]["error"]["type"] == "OutsideConvergenceSector"

    def test_csv(self, capsys, spec_file):
        code, out, _ = run(
            capsys, "eval", "--spec", spec_file(EXP_SPEC), "--format", "csv", "--moduli", "0.5,1"
        )
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 2
        assert float(rows[1]["value_re"]) == pytest.approx(math.exp(-1), abs=1e-10)
        assert rows[0]["method"] == "contour"
        assert out.splitlines()[0].startswith("modulus,phase,value_re,value_im")

    def test_deterministic_output(self, capsys, spec_file, tmp_path):
        path = tmp_path / "report.json"
        args = ["eval", "--spec", spec_file(EXP_SPEC), "--moduli", "0.5,1.5", "--out", str(path)]
        assert main(args) == EXIT_OK
        first = path.read_bytes()
        assert main(args) == EXIT_OK
        assert path.read_bytes() == first
        assert capsys.readouterr().out == ""


class TestVerify:
    """ verify 명령 """

    def test_main_example(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--identity", "MAIN",
            "--alpha", "0.3",
            "--beta", "0.2",
            "--lambda", "0.5",
            "--delta", "0.4",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["verdict"] == "pass"
        assert report["kernel"]["passed"]
        assert len(report["kernel"]["checks"]) == 2 * 25
        assert report["sector"]["phase_bound"] == pytest.approx(0.9 * math.pi, abs=1e-5)
        assert report["sector"]["max_modulus"] is None
        assert len(report["samples"]) == 2

    def test_g43_carries_note(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--identity", "G43", "--beta", "0.3", "--delta", "0.5"
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["notes"]
        assert "H^{m+1,n+1}_{p+1,q+1}" in report["notes"][0]

    def test_excluded_samples_are_reported(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--identity", "R1981",
            "--alpha", "0.3",
            "--lambda", "0.5",
            "--phases", "0,2.0",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert [x["phase"] for x in report["excluded"]] == [2.0, 2.0]
        assert "kernel" not in report

    def test_empty_region(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--identity", "MAIN",
            "--alpha", "0.3",
            "--beta", "0.2",
            "--lambda", "1.2",
            "--delta", "0.1",
        )
        assert code == EXIT_EMPTY_REGION
        report = json.loads(out)
        assert report["verdict"] == "fail"
        assert report["error"]["type"] == "EmptyAdmissibleRegion"

    def test_grid_outside_sector(self, capsys):
        code, _, _ = run(
            capsys, "verify", "--identity", "R1981", "--alpha", "0.3", "--lambda", "0.5", "--phases", "2.0"
        )
        assert code == EXIT_EMPTY_REGION

    def test_invalid_params(self, capsys):
        code, _, err = run(capsys, "verify", "--identity", "MAIN", "--lambda", "0.5")
        assert code == EXIT_USAGE
        assert err

    def test_unknown_identity(self, capsys):
        code, _, _ = run(capsys, "verify", "--identity", "MAINX")
        assert code == EXIT_USAGE

    def test_custom_base(self, capsys, spec_file):
        code, out, _ = run(
            capsys,
            "verify",
            "--identity", "R1981",
            "--alpha", "0.3",
            "--lambda", "0.25",
            "--base", spec_file(EXP_SPEC),
            "--phases", "0,0.5",
        )
        assert code == EXIT_OK
        assert json.loads(out)["sector"]["phase_bound"] == pytest.approx(0.25 * math.pi, abs=1e-5)

    def test_csv_rows_per_term(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--identity", "RMULTI",
            "--alpha", "0.3",
            "--lambda", "0.5",
            "--format", "csv",
        )
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 2 * 3
        assert {x["side"] for x in rows} == {"lhs", "rhs"}

    @pytest.mark.parametrize("fmt", ["json", "csv"])
    def test_deterministic_output(self, capsys, tmp_path, fmt):
        code = assert_repeatable(
            tmp_path,
            "verify",
            "--identity", "MAIN",
            "--alpha", "0.3",
            "--beta", "0.2",
            "--lambda", "0.5",
            "--delta", "0.4",
            "--workers", "4",
            fmt=fmt,
        )
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""


class TestOracle:
    def test_restricted_grid(self, capsys):
        code, out, _ = run(capsys, "oracle", "--moduli", "0.5", "--phases", "0,0.2")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["verdict"] == "pass"
        references = {x["reference"] for x in report["comparisons"]}
        assert references == {"series", "closed_form"}

    def test_diverging_series_fails(self, capsys):
        code, out, _ = run(capsys, "oracle", "--moduli", "1.5", "--phases", "0")
        assert code == EXIT_NUMERIC
        assert json.loads(out)["failed"] > 0

    @pytest.mark.parametrize("fmt", ["json", "csv"])
    def test_deterministic_output(self, capsys, tmp_path, fmt):
        code = assert_repeatable(tmp_path, "oracle", "--moduli", "0.5", "--phases", "0,0.2", fmt=fmt)
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""


class TestGammaCheck:
    def test_default(self, capsys):
        code, out, _ = run(capsys, "gammacheck")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["verdict"] == "pass"
        assert report["count"] == 1000

    def test_injected_fault(self, capsys):
        code, out, _ = run(capsys, "gammacheck", "--inject-fault", "--count", "50")
        assert code == EXIT_NUMERIC
        report = json.loads(out)
        assert report["offenders"]["reflection_sin"]

    def test_zero_count(self, capsys):
        code, out, _ = run(capsys, "gammacheck", "--count", "0")
        assert code == EXIT_OK
        assert json.loads(out)["worst"] == {}

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "gammacheck", "--count", "20", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "check,worst,tolerance,passed"
        assert len(out.splitlines()) == 5
