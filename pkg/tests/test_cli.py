import json
import math

import pytest

from korder.cli import main, parse_complex, render_json


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRenderJson:
    def test_scalars(self):
        assert render_json(None) == "null"
        assert render_json(True) == "true"
        assert render_json(False) == "false"
        assert render_json(3) == "3"
        assert render_json(0.1) == "0.10000000000000001"
        assert render_json("a\"b") == '"a\\"b"'

    def test_bool_not_treated_as_int(self):
        assert render_json({"flag": True}) == '{"flag": true}'

    def test_complex_as_object(self):
        assert render_json(1.5 - 2j) == '{"re": 1.5, "im": -2}'

    def test_nested(self):
        out = render_json({"xs": [1, 2.5], "inner": {"ok": False}})
        assert out == '{"xs": [1, 2.5], "inner": {"ok": false}}'
        assert json.loads(out) == {"xs": [1, 2.5], "inner": {"ok": False}}

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            render_json(math.inf)
        with pytest.raises(ValueError):
            render_json(math.nan)

    def test_rejects_unknown_type(self):
        with pytest.raises(TypeError):
            render_json(object())


class TestParseComplex:
    def test_accepts_i_notation(self):
        assert parse_complex("0.3+0.4i") == complex(0.3, 0.4)
        assert parse_complex(" -0.5i ") == complex(0.0, -0.5)
        assert parse_complex("0.25") == complex(0.25, 0.0)

    def test_rejects_garbage(self):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            parse_complex("abc")


class TestEvalCommand:
    def test_log_case_golden(self, capsys):
        code, out, _ = run(capsys, ["eval", "--alpha", "0.5", "--z", "0.5+0i"])
        assert code == 0
        data = json.loads(out)
        assert data["alpha"] == 0.5
        assert data["k"]["re"] == pytest.approx(math.log(2.0), abs=1e-16)
        assert data["h"]["re"] == pytest.approx(1.3862943611198906, abs=1e-16)
        assert data["h"]["im"] == 0
        assert set(data) == {"alpha", "z", "k", "h", "h_prime", "convexity_transform"}

    def test_rejects_alpha_out_of_range(self, capsys):
        code, _, err = run(capsys, ["eval", "--alpha", "1.2", "--z", "0.1"])
        assert code == 2
        assert err.startswith("error:")

    def test_rejects_bad_complex(self, capsys):
        code, _, _ = run(capsys, ["eval", "--alpha", "0.5", "--z", "xyz"])
        assert code == 2

    def test_missing_argument(self, capsys):
        code, _, _ = run(capsys, ["eval", "--alpha", "0.5"])
        assert code == 2


class TestBoundaryCommand:
    def test_csv_shape(self, capsys):
        code, out, _ = run(capsys, ["boundary", "--alpha", "0.6", "--samples", "16"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "theta,u,v,phi"
        assert len(lines) == 17
        first = [float(x) for x in lines[1].split(",")]
        assert len(first) == 4

    def test_json_with_asymptote(self, capsys):
        code, out, _ = run(
            capsys,
            ["boundary", "--alpha", "0.25", "--samples", "8", "--format", "json"],
        )
        assert code == 0
        data = json.loads(out)
        assert len(data["samples"]) == 8
        assert data["asymptote"]["slope"] == pytest.approx(1.0, abs=1e-12)
        assert data["asymptote"]["anchor"] == pytest.approx(-2.0, abs=1e-12)

    def test_json_without_asymptote(self, capsys):
        code, out, _ = run(
            capsys,
            ["boundary", "--alpha", "0.75", "--samples", "8", "--format", "json"],
        )
        assert code == 0
        assert "asymptote" not in json.loads(out)


class TestExtremalMCommand:
    def test_half_is_exact(self, capsys):
        code, out, _ = run(capsys, ["extremal-m", "--alpha", "0.5"])
        assert code == 0
        data = json.loads(out)
        assert data["theta_alpha"] is None
        assert data["M"] == pytest.approx(math.pi / 2, abs=1e-16)

    def test_generic_alpha(self, capsys):
        code, out, _ = run(capsys, ["extremal-m", "--alpha", "0.6"])
        assert code == 0
        data = json.loads(out)
        assert data["theta_alpha"] == pytest.approx(0.11326510040449943, abs=1e-9)
        assert data["M"] == pytest.approx(0.74205751392315713, abs=1e-9)


class TestQCommand:
    def test_borderline(self, capsys):
        code, out, _ = run(capsys, ["q", "--alpha", "0.5", "--t", str(math.pi / 2)])
        assert code == 0
        data = json.loads(out)
        assert data["value"] == pytest.approx(-math.pi / 2, abs=1e-15)
        assert data["case"] == "borderline"
        assert data["theta0"] is None

    def test_unbounded_renders_string(self, capsys):
        code, out, _ = run(capsys, ["q", "--alpha", "0.3", "--t", str(0.5 * math.pi)])
        assert code == 0
        data = json.loads(out)
        assert data["value"] == "-inf"
        assert data["case"] == "unbounded-below"

    def test_interior_critical_reports_theta0(self, capsys):
        code, out, _ = run(capsys, ["q", "--alpha", "0.3", "--t", "0.2"])
        assert code == 0
        data = json.loads(out)
        assert data["case"] == "interior-critical"
        assert data["theta0"] > 0

    def test_closed_form(self, capsys):
        code, out, _ = run(capsys, ["q", "--alpha", "0.75", "--t", str(math.pi)])
        assert code == 0
        data = json.loads(out)
        assert data["value"] == pytest.approx(-2.0, abs=1e-15)
        assert data["case"] == "closed-form"


class TestSubcheckCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(
            capsys, ["subcheck", "--alpha", "0.6", "--seed", "0", "--trials", "2"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["pass"] is True
        assert data["trials"] == 2
        assert data["points_checked"] == 200
        assert data["violations"] == []

    def test_env_var_sets_default_trials(self, capsys, monkeypatch):
        monkeypatch.setenv("KORDER_TRIALS", "3")
        code, out, _ = run(capsys, ["subcheck", "--alpha", "0.6", "--seed", "0"])
        assert code == 0
        assert json.loads(out)["trials"] == 3

    def test_flag_overrides_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("KORDER_TRIALS", "3")
        code, out, _ = run(
            capsys, ["subcheck", "--alpha", "0.6", "--seed", "0", "--trials", "1"]
        )
        assert code == 0
        assert json.loads(out)["trials"] == 1

    def test_bad_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("KORDER_TRIALS", "abc")
        code, _, err = run(capsys, ["subcheck", "--alpha", "0.6", "--seed", "0"])
        assert code == 2
        assert err.startswith("error:")


class TestStarlikeAvgCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(
            capsys, ["starlike-avg", "--alpha", "0.6", "--seed", "0", "--pairs", "3"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["pairs"] == 3
        assert data["min_re_star"] >= -1e-9
        assert data["pass"] is True


class TestCounterexampleCommand:
    def test_report(self, capsys):
        code, out, _ = run(capsys, ["counterexample"])
        assert code == 0
        data = json.loads(out)
        assert data["coeff_sum"] == pytest.approx(0.59, abs=1e-15)
        assert data["coeff_sum_convex"] is True
        assert data["subordinate"] is False
        assert data["derivative_at_fixed_point"]["re"] == pytest.approx(1.01, abs=1e-15)
        roots = data["unit_derivative_roots"]
        assert len(roots) == 2
        assert roots[1]["im"] == pytest.approx(math.sqrt(0.3), abs=1e-12)


class TestVerifyPaperCommand:
    def test_passes_and_reruns_byte_identical(self, capsys):
        code1, out1, _ = run(capsys, ["verify-paper", "--seed", "0", "--trials", "2"])
        code2, out2, _ = run(capsys, ["verify-paper", "--seed", "0", "--trials", "2"])
        assert code1 == 0
        assert code2 == 0
        assert out1 == out2
        data = json.loads(out1)
        assert data["overall"] is True
        assert len(data["checks"]) == 11


class TestParserBasics:
    def test_version_exits_zero(self, capsys):
        code, out, _ = run(capsys, ["--version"])
        assert code == 0
        assert out.startswith("korder ")

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, ["bogus"])
        assert code == 2

    def test_no_command(self, capsys):
        code, _, _ = run(capsys, [])
        assert code == 2
