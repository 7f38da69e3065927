"""End-to-end tests for the wg-bench command line"""

import json

import numpy as np
import pandas as pd
import pytest

from workbench.cli import main, run as run_config
from workbench.config import ZEROS_ENV, build_config
from workbench.reports import ErrorReport, validate_report


@pytest.fixture
def run(tmp_path, capsys, monkeypatch):
    """Run main with a scratch results directory; returns (exit code, stdout)"""
    monkeypatch.delenv(ZEROS_ENV, raising=False)

    def _run(*argv):
        code = main([*argv, "--quiet", "--results-dir", str(tmp_path)])
        return code, capsys.readouterr().out
    return _run


@pytest.fixture
def zeros_file(tmp_path, zero_table):
    path = tmp_path / "zeros.txt"
    np.savetxt(path, zero_table.gammas, fmt="%.12f")
    return path


def test_exponents_report(run):
    code, out = run("exponents", "--k", "1", "--l", "2")
    assert code == 0
    report = validate_report("exponents", out)
    assert report.Theta.startswith("0.336899")
    assert report.best_label == "A"
    assert report.admissible_H is None


def test_exponents_with_admissible_range(run):
    code, out = run("exponents", "--k", "1", "--l", "2", "--x", "1e6")
    assert code == 0
    report = validate_report("exponents", out)
    assert report.admissible_H.X == 10 ** 6
    assert report.admissible_H.lower < report.admissible_H.upper


def test_domain_error_is_reported_as_json(run):
    code, out = run("exponents", "--k", "1", "--l", "1")
    assert code == 2
    error = ErrorReport.model_validate_json(out)
    assert error.error == "DomainError"
    assert error.subcommand == "exponents"


def test_missing_parameter(run):
    code, out = run("sieve-experiment", "--k", "1", "--l", "2")
    assert code == 2
    assert "--x" in json.loads(out)["message"]


def test_table1_is_deterministic(run, tmp_path):
    code, out = run("table1", "--out", "t1.csv")
    assert code == 0
    report = validate_report("table1", out)
    assert report.labels["2"]["k1"] == "A"
    assert report.labels["3"]["k3"] == "LZ"
    first = (tmp_path / "t1.csv").read_bytes()
    run("table1", "--out", "t1.csv")
    assert (tmp_path / "t1.csv").read_bytes() == first
    assert len(pd.read_csv(tmp_path / "t1.csv")) == 19


def test_solve_phi(run):
    code, out = run("solve-phi", "--l", "2")
    assert code == 0
    report = validate_report("solve-phi", out)
    assert abs(report.closed_form_deltas["lambda1"]) < 1e-9
    assert abs(report.closed_form_deltas["lambda2"]) < 1e-9


def test_psi_interval_report(run):
    code, out = run("psi-interval", "--x", "1e6")
    assert code == 0
    report = validate_report("psi-interval", out)
    assert report.X == 10 ** 6
    assert report.in_short_range
    assert abs(report.ratio - 1) < 0.25


def test_sieve_experiment_appends_ledger(run, tmp_path):
    args = ("sieve-experiment", "--k", "1", "--l", "2", "--x", "10000", "--h", "X^0.55")
    assert run(*args)[0] == 0
    code, out = run(*args)
    assert code == 0
    report = validate_report("sieve-experiment", out)
    assert report.H == 159
    assert 0.5 < report.ratio < 1.5
    ledger = pd.read_csv(tmp_path / "ledger.csv")
    assert len(ledger) == 2
    assert list(ledger.columns) == ["k", "l", "X", "H", "sum", "predicted", "ratio", "seconds"]
    assert (tmp_path / "sieve_experiment.json").exists()


def test_lattice_count(run):
    code, out = run("lattice-count", "--k", "1", "--l", "2", "--x", "4", "--h", "4")
    assert code == 0
    assert validate_report("lattice-count", out).count == 8


def test_main_term_check(run):
    code, out = run("main-term-check", "--k", "2", "--l", "2", "--x", "100000", "--h", "1000")
    assert code == 0
    report = validate_report("main-term-check", out)
    assert report.C == pytest.approx(np.pi / 4)


def test_explicit_formula_needs_zeros(run):
    code, out = run("explicit-formula", "--x", "100000", "--t", "100")
    assert code == 2
    assert json.loads(out)["error"] == "ConfigError"


def test_explicit_formula_grid(run, zeros_file):
    code, out = run("explicit-formula", "--zeros", str(zeros_file), "--x", "100000",
                    "--t", "1000", "--grid", "5")
    assert code == 0
    report = validate_report("explicit-formula", out)
    assert len(report.points) == 5
    assert report.zeros_used == 649
    assert report.max_fitted_constant <= 5


def test_zeros_from_environment(run, zeros_file, monkeypatch):
    monkeypatch.setenv(ZEROS_ENV, str(zeros_file))
    code, out = run("s-rho-audit", "--k", "1", "--l", "2", "--x", "100000",
                    "--h", "1000", "--count", "5")
    assert code == 0
    assert validate_report("s-rho-audit", out).zeros_audited == 5


def test_osc_audit_custom_grid(run, tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([
        {"k": 1, "l": 2, "alpha": 0.5, "gamma": 30.0, "n": 0, "Q": 100.0, "U": 1.0, "V": 100.0},
        {"k": 2, "l": 3, "alpha": 1.0, "gamma": 1.0, "n": 3, "Q": 100.0, "U": 10.0, "V": 50.0},
    ]))
    code, out = run("osc-audit", "--grid", str(grid))
    assert code == 0
    report = validate_report("osc-audit", out)
    assert report.cases == 2
    assert report.max_closed_form_error < 1e-6
    assert (tmp_path / "osc_audit.csv").exists()


def test_plot_data_phi_with_html(run):
    code, out = run("plot-data", "--kind", "phi", "--html")
    assert code == 0
    report = validate_report("plot-data", out)
    assert report.rows == 1001
    assert report.html.endswith("plot_phi.html")


def test_config_file_and_unknown_keys(run, tmp_path):
    good = tmp_path / "good.cfg"
    good.write_text("k = 2\nl = 3\n")
    code, out = run("exponents", "--config", str(good))
    assert code == 0
    assert validate_report("exponents", out).k == 2

    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    code, out = run("exponents", "--config", str(bad))
    assert code == 2
    assert json.loads(out)["error"] == "ConfigError"


def test_missing_config_file_is_an_io_failure(run, tmp_path):
    code, out = run("exponents", "--config", str(tmp_path / "absent.cfg"))
    assert code == 1
    assert json.loads(out)["error"] == "FileNotFoundError"


def test_run_dispatches_a_built_config(tmp_path, capsys):
    config = build_config("lattice-count", {"k": 1.0, "l": 2.0, "x": "4", "h": "4",
                                            "quiet": True, "results_dir": str(tmp_path)}, environ={})
    assert run_config(config) == 0
    assert validate_report("lattice-count", capsys.readouterr().out).count == 8
