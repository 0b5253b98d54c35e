import io
import json

import pytest
from hypothesis import given

from hyperpoly.cli import main
from hyperpoly.errors import ParseError
from hyperpoly.parsing import (
    format_polynomial,
    parse_polynomial,
    parse_polynomial_json,
    polynomial_to_json,
)
from hyperpoly.poly import Poly, Q

from strategies import polys


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestParsing:
    def test_mixed_coefficients(self):
        assert parse_polynomial("1,-3/2,0,2").coeffs == (1, Q(-3, 2), 0, 2)

    def test_zeros_trim_to_zero_polynomial(self):
        assert parse_polynomial("0,0,0").is_zero
        assert parse_polynomial("").is_zero

    def test_whitespace(self):
        assert parse_polynomial(" 1 , 2 / 3 ") == Poly([1, Q(2, 3)])

    def test_zero_denominator_position(self):
        with pytest.raises(ParseError) as info:
            parse_polynomial("1,2/0")
        assert info.value.position == 4

    @pytest.mark.parametrize("text, pos", [("1,,2", 2), ("1,x", 2), ("1.5", 0), ("1,2/", 2)])
    def test_malformed(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_polynomial(text)
        assert info.value.position == pos

    def test_json_form(self):
        assert parse_polynomial('{"coeffs": ["1", "-3/2", 0, 2]}') == Poly([1, Q(-3, 2), 0, 2])
        with pytest.raises(ParseError):
            parse_polynomial_json('{"coeffs": [1.5]}')
        with pytest.raises(ParseError):
            parse_polynomial_json("[1, 2]")

    @given(polys(max_degree=10))
    def test_round_trip(self, f):
        assert parse_polynomial(format_polynomial(f)) == f
        assert parse_polynomial(json.dumps(polynomial_to_json(f))) == f


class TestCommands:
    def test_analyze_imaginary_pair(self):
        code, out = run("analyze", "--coeffs", "1,0,1")
        report = json.loads(out)
        assert code == 0
        assert report["ground_truth"] is False and report["zc"] == 2
        assert report["funny_ledger"]["0"][0]["kind"] == "positive_min"

    def test_analyze_is_deterministic(self):
        assert run("analyze", "--coeffs", "3,-7,0,2,1") == run("analyze", "--coeffs", "3,-7,0,2,1")

    def test_negative_leading_coefficient_argument(self):
        code, out = run("analyze", "--coeffs", "-1,0,1", "--oracle")
        assert code == 0 and json.loads(out)["oracle_nonreal"] == 0

    def test_input_file(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text('{"coeffs": ["0", "-1", "0", "1"]}')
        code, out = run("analyze", "--input", str(path))
        assert code == 0 and json.loads(out)["ground_truth"] is True

    def test_fourier_inadmissible(self, capsys):
        code, out = run("fourier", "--coeffs", "1,0,0,0,1")
        assert code == 3 and out == ""
        assert "j = 2" in capsys.readouterr().err

    def test_fourier_ok(self):
        code, out = run("fourier", "--coeffs", "1,0,1")
        data = json.loads(out)
        assert code == 0 and data["counting_identity"]["holds"]
        assert data["telescoped"]["nonreal_count"] == 2

    def test_fourier_repeated_root(self):
        assert run("fourier", "--coeffs", "1,-2,1")[0] == 3

    def test_sample_csv(self):
        code, out = run("sample", "--coeffs", "0,-1,0,1", "--from", "-1", "--to", "1",
                        "--points", "3", "--deriv", "1")
        assert code == 0
        assert out.splitlines() == ["x,value", "-1.0,2.0", "0.0,-1.0", "1.0,2.0"]

    def test_sample_json(self):
        code, out = run("sample", "--coeffs", "1,1", "--from", "0", "--to", "1/2",
                        "--points", "2", "--format", "json")
        assert json.loads(out) == [{"value": 1.0, "x": 0.0}, {"value": 1.5, "x": 0.5}]

    def test_funny_order(self):
        code, out = run("entire", "funny-order", "--a", "1", "--max-order", "8")
        assert code == 0 and json.loads(out) == {"a": 1.0, "d_star": 0}

    def test_entire_sample(self):
        code, out = run("entire", "sample", "--a", "1", "--from", "0", "--to", "1", "--points", "2")
        assert out.splitlines()[1] == "0.0,0.25"

    def test_product(self):
        code, out = run("product", "--kind", "quadratic", "--z", "1/4", "--terms", "10000")
        data = json.loads(out)
        assert code == 0 and abs(data["value"] - 0.6366) < 1e-3
        assert data["verdict"] == "convergent" and "abs_sum" in data

    def test_product_short(self):
        data = json.loads(run("product", "--kind", "linear", "--z", "1", "--terms", "10")[1])
        assert data["zero_at"] == 1 and data["verdict"] == "undetermined"


class TestExitCodes:
    def test_parse_error(self, capsys):
        assert run("analyze", "--coeffs", "1,2/0")[0] == 2
        assert "character 4" in capsys.readouterr().err

    def test_constant_is_validation_error(self):
        assert run("analyze", "--coeffs", "5")[0] == 2

    def test_missing_file(self):
        assert run("analyze", "--input", "/nonexistent/poly.txt")[0] == 2

    def test_argparse_errors(self):
        for argv in (["analyze"], ["product", "--kind", "bogus", "--z", "1", "--terms", "5"],
                     ["sample", "--coeffs", "1,1", "--from", "1", "--to", "0"]):
            with pytest.raises(SystemExit) as info:
                run(*argv)
            assert info.value.code == 2

    def test_oracle_failure(self, monkeypatch):
        from hyperpoly import cli
        from hyperpoly.errors import NoConvergence

        def boom(*args):
            raise NoConvergence("stuck")

        monkeypatch.setattr(cli, "oracle_nonreal_count", boom)
        assert run("analyze", "--coeffs", "1,0,1", "--oracle")[0] == 4

    def test_internal_disagreement(self, monkeypatch):
        from hyperpoly import cli
        from hyperpoly.errors import InternalDisagreement

        def boom(f):
            raise InternalDisagreement("verdicts differ", {})

        monkeypatch.setattr(cli, "analyze", boom)
        assert run("analyze", "--coeffs", "1,0,1")[0] == 5


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "hyperpoly", "fourier", "--coeffs", "1,0,0,0,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and "j = 2" in proc.stderr
