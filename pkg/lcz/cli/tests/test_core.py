# Licensed under a 3-clause BSD style license - see LICENSE.rst

import json

import pytest

from .. import core
from ..core import *
from ...exceptions import HypothesisViolated
from ...characterize import CheckReport, SuiteVerdict
from ...series import TruncatedSeries
from ...arithfun import ArithFun


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv, "--format", "json")
    return status, json.loads(out)


@pytest.fixture
def exp_file(tmp_path):
    path = str(tmp_path / "exp.json")
    TruncatedSeries.exponential(8).write(path)
    return path


class TestGenerate:
    def test_factorial(self, capsys, tmp_path):
        path = str(tmp_path / "F.json")
        status, out, err = run(capsys, "generate", "--type", "factorial",
                               "--variant", "multiplicative", "--a1", "2",
                               "--order", "4", "--out", path)
        assert status == EXIT_OK
        assert out == ""
        F = TruncatedSeries.read(path)
        assert F == TruncatedSeries([1, 2, 2, "4/3", "2/3"])

    def test_text(self, capsys):
        status, out, err = run(capsys, "generate", "--type", "q:2",
                               "--variant", "additive", "--a1", "1",
                               "--order", "3")
        assert status == EXIT_OK
        assert out.strip() == "X + 2/3 X^2 + 1/7 X^3"

    def test_zero_a1(self, capsys):
        status, out, err = run(capsys, "generate", "--a1", "0")
        assert status == EXIT_INPUT_ERROR
        assert "nonzero" in err

    def test_bad_rational(self, capsys):
        status, out, err = run(capsys, "generate", "--a1", "1/0")
        assert status == EXIT_INPUT_ERROR


class TestSuite:
    def test_exponential(self, capsys, exp_file):
        status, document = run_json(capsys, "suite", "--series", exp_file,
                                    "--trials", "5", "--seed", "3")
        assert status == EXIT_OK
        assert document["theorem"] == "1.3"
        assert document["suite"] == "exponential-multiplicative"
        assert document["consistent"]
        assert [c["id"] for c in document["conditions"]] == [1, 2, 3, 4, 5]
        assert all(c["holds"] for c in document["conditions"])
        assert document["conditions"][2]["seed"] == 3

    def test_wrong_family(self, capsys, exp_file):
        status, out, err = run(capsys, "suite", "--series", exp_file,
                               "--type", "q:2", "--trials", "5")
        assert status == EXIT_OK
        assert "suite: q-exponential-multiplicative (theorem 2.3)" in out
        assert "consistent: yes" in out
        assert "witness (1) closed-form" in out

    def test_generated_roundtrip(self, capsys, tmp_path):
        path = str(tmp_path / "G.json")
        assert main(["generate", "--type", "ones", "--variant", "additive",
                     "--a1=-1/2", "--order", "8", "--out", path]) == 0
        status, document = run_json(capsys, "suite", "--series", path,
                                    "--type", "ones", "--variant",
                                    "additive", "--trials", "5")
        assert status == EXIT_OK
        assert document["theorem"] == "2.2"
        assert document["suite"] == "geometric-additive"
        assert all(c["holds"] for c in document["conditions"])

    def test_environment_seed(self, capsys, exp_file, monkeypatch):
        monkeypatch.setenv("LCZ_SEED", "11")
        status, document = run_json(capsys, "suite", "--series", exp_file,
                                    "--trials", "2")
        assert document["conditions"][3]["seed"] == 11
        status, document = run_json(capsys, "suite", "--series", exp_file,
                                    "--trials", "2", "--seed", "5")
        assert document["conditions"][3]["seed"] == 5

    def test_out(self, tmp_path, capsys, exp_file):
        out_path = tmp_path / "report.json"
        status, out, err = run(capsys, "suite", "--series", exp_file,
                               "--trials", "2", "--format", "json",
                               "--out", str(out_path))
        assert out == ""
        assert json.loads(out_path.read_text())["consistent"]

    def test_zero_a1(self, capsys, tmp_path):
        path = str(tmp_path / "zero.json")
        TruncatedSeries.zero(8).write(path)
        with pytest.warns(HypothesisViolated):
            status, document = run_json(capsys, "suite", "--series", path,
                                        "--trials", "3")
        assert status == EXIT_OK
        assert document["hypothesis_violated"]
        assert not document["consistent"]

    def test_inconsistent(self, capsys, exp_file, monkeypatch):
        def disagreeing(F, B, variant, **kwargs):
            return SuiteVerdict("exponential-multiplicative", variant, [
                CheckReport("exponential-multiplicative", 1, "closed-form",
                            variant, True, "exact", order=8),
                CheckReport("exponential-multiplicative", 2, "embedded",
                            variant, False, "exact", order=8,
                            witness={"omega_m": 1, "omega_n": 2}),
            ])

        monkeypatch.setattr(core, "run_suite", disagreeing)
        status, out, err = run(capsys, "suite", "--series", exp_file)
        assert status == EXIT_INCONSISTENT
        assert "consistent: NO" in out

    def test_dirichlet_builtin(self, capsys):
        status, out, err = run(capsys, "suite", "--builtin", "tau",
                               "--bound", "50", "--trials", "5")
        assert status == EXIT_OK
        assert "suite: dirichlet-multiplicative (theorem 1.1)" in out
        assert "consistent: yes" in out

    def test_dirichlet_file(self, capsys, tmp_path):
        path = str(tmp_path / "omega.json")
        ArithFun.from_function(lambda n: n * n, 30).write(path)
        status, document = run_json(capsys, "suite", "--function", path,
                                    "--trials", "3")
        assert status == EXIT_OK
        assert all(c["holds"] for c in document["conditions"])

    def test_missing_source(self, capsys):
        status, out, err = run(capsys, "suite")
        assert status == EXIT_INPUT_ERROR
        assert "--function or --builtin" in err

    def test_bad_inputs(self, capsys, tmp_path, exp_file):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["suite", "--series", str(bad)]) == EXIT_INPUT_ERROR
        assert main(["suite", "--series", str(tmp_path / "missing.json")]) \
            == EXIT_INPUT_ERROR
        bad.write_text(json.dumps({"order": 3, "coeffs": ["1", "1"]}))
        assert main(["suite", "--series", str(bad)]) == EXIT_INPUT_ERROR
        assert main(["suite", "--series", exp_file, "--type", "q:-1"]) \
            == EXIT_INPUT_ERROR
        assert main(["suite", "--series", exp_file, "--order", "12"]) \
            == EXIT_INPUT_ERROR
        TruncatedSeries([1, 1]).write(str(bad))
        assert main(["suite", "--series", str(bad)]) == EXIT_INPUT_ERROR
        capsys.readouterr()


class TestCheck:
    def test_by_name(self, capsys, exp_file):
        status, out, err = run(capsys, "check", "--series", exp_file,
                               "--condition", "closed-form")
        assert status == EXIT_OK
        assert "condition (1) closed-form: verified to order 8" in out

    def test_by_number(self, capsys, exp_file):
        status, document = run_json(capsys, "check", "--series", exp_file,
                                    "--type", "ones", "--condition", "4",
                                    "--trials", "3")
        assert status == EXIT_OK
        assert document["theorem"] == "2.1"
        (report,) = document["conditions"]
        assert report["name"] == "carlitz-square"
        assert not report["holds"]
        assert "trial_seed" in report["witness"]

    def test_unknown(self, capsys, exp_file):
        status, out, err = run(capsys, "check", "--series", exp_file,
                               "--condition", "9")
        assert status == EXIT_INPUT_ERROR


class TestConv:
    def test_dirichlet(self, capsys, tmp_path):
        zeta = str(tmp_path / "zeta.json")
        ArithFun([1] * 6).write(zeta)
        status, document = run_json(capsys, "conv", "--kind", "dirichlet",
                                    "--f", zeta, "--g", zeta)
        assert status == EXIT_OK
        assert document == {"bound": 6,
                            "values": ["1", "2", "2", "3", "2", "4"]}

    def test_unitary_text(self, capsys, tmp_path):
        zeta = str(tmp_path / "zeta.json")
        ArithFun([1] * 4).write(zeta)
        status, out, err = run(capsys, "conv", "--kind", "unitary",
                               "--f", zeta, "--g", zeta)
        lines = out.splitlines()
        assert lines[0].split() == ["n", "value"]
        assert lines[-1].split() == ["4", "2"]

    def test_binomial(self, capsys, tmp_path):
        ones = tmp_path / "ones.json"
        ones.write_text(json.dumps({"bound": 4, "values": ["1"] * 5}))
        status, document = run_json(capsys, "conv", "--kind", "binomial",
                                    "--f", str(ones), "--g", str(ones))
        assert status == EXIT_OK
        assert document["values"] == ["1", "2", "4", "8", "16"]

    def test_bound_mismatch(self, capsys, tmp_path):
        f, g = str(tmp_path / "f.json"), str(tmp_path / "g.json")
        ArithFun([1] * 4).write(f)
        ArithFun([1] * 5).write(g)
        status, out, err = run(capsys, "conv", "--kind", "dirichlet",
                               "--f", f, "--g", g)
        assert status == EXIT_INPUT_ERROR
        assert "bound" in err


class TestOracle:
    def test_flags(self, capsys):
        status, out, err = run(capsys, "oracle", "flags", "--n", "3",
                               "--q", "2")
        assert status == EXIT_OK
        assert out.strip() == ("flags(n=3, q=2): count 21, closed form 21, "
                               "agree")

    def test_json(self, capsys):
        status, document = run_json(capsys, "oracle", "subspaces", "--n",
                                    "4", "--k", "2", "--q", "2")
        assert document == {"kind": "subspaces",
                            "params": {"n": 4, "k": 2, "q": 2},
                            "count": "35", "expected": "35"}

    def test_chains(self, capsys):
        status, document = run_json(capsys, "oracle", "chains", "--n", "5")
        assert document["count"] == "120"

    def test_infeasible(self, capsys):
        status, out, err = run(capsys, "oracle", "flags", "--n", "2",
                               "--q", "4")
        assert status == EXIT_INPUT_ERROR
        assert "not prime" in err


class TestClassify:
    def test_builtin(self, capsys):
        status, document = run_json(capsys, "classify", "--builtin", "tau",
                                    "--bound", "100", "--kind",
                                    "completely_multiplicative")
        assert status == EXIT_OK
        assert document == {"kind": "completely_multiplicative",
                            "holds": False, "witness": [2, 2],
                            "vacuous": False}

    def test_text(self, capsys):
        status, out, err = run(capsys, "classify", "--builtin", "big_omega",
                               "--bound", "30", "--kind",
                               "completely_additive")
        assert out.strip() == "completely_additive: holds"

    def test_power(self, capsys):
        status, document = run_json(capsys, "classify", "--builtin",
                                    "nth_power", "--k", "2", "--bound", "20",
                                    "--kind", "multiplicative")
        assert document["holds"]

    def test_binomial_kind(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"bound": 4,
                                    "values": ["1", "3", "9", "27", "81"]}))
        status, document = run_json(capsys, "classify", "--function",
                                    str(path), "--kind",
                                    "binomial_multiplicative")
        assert status == EXIT_OK
        assert document["holds"]

    def test_binomial_needs_file(self, capsys):
        status, out, err = run(capsys, "classify", "--builtin", "zeta",
                               "--kind", "binomial_additive")
        assert status == EXIT_INPUT_ERROR


class TestParser:
    def test_usage_errors_exit_1(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == EXIT_INPUT_ERROR
        with pytest.raises(SystemExit) as excinfo:
            main(["oracle", "posets", "--n", "3"])
        assert excinfo.value.code == EXIT_INPUT_ERROR
        with pytest.raises(SystemExit) as excinfo:
            main(["generate", "--a1", "1", "--order", "0"])
        assert excinfo.value.code == EXIT_INPUT_ERROR

    def test_config(self, monkeypatch):
        monkeypatch.delenv("LCZ_SEED", raising=False)
        args = build_parser().parse_args(["oracle", "chains", "--n", "3"])
        config = RunConfig.from_namespace(args)
        assert config.command == "oracle"
        assert config.seed == 42
        assert config.format == "text"
