#!/usr/bin/env python3
"""
Workbench Command Line
Single entry point for the exponent, sieve, explicit-formula and
oscillatory-integral experiments
"""

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

# Add parent directory to path for imports
sys.path.append(str(Path(__file__).parent.parent))

from arith.main_term import main_term_check, main_term_constant
from arith.prime_sieve import psi_short_interval_check
from arith.representation import (
    LEDGER_COLUMNS,
    lattice_count,
    power_count,
    run_sieve_experiment,
)
from exponents.density_exponents import solve_lambda1, solve_lambda2
from exponents.exponent_calculus import (
    PowerPair,
    admissible_H,
    exponent_report,
    lambda1,
    lambda2,
    table1,
)
from oscillatory.audit_grid import builtin_audit_grid, load_audit_grid, run_osc_audit
from utils.data_storage import DataStorage
from utils.errors import ConfigError, WorkbenchError
from utils.formatting import resolve_interval_length
from workbench import plot_data
from workbench.config import PLOT_KINDS, SUBCOMMANDS, build_config
from workbench.reports import (
    AdmissibleRangeReport,
    ErrorReport,
    ExplicitFormulaReport,
    ExponentsReport,
    LatticeCountReport,
    MainTermCheckReport,
    OscAuditReport,
    PlotDataReport,
    PsiIntervalReport,
    PsiPoint,
    SieveExperimentReport,
    SolvePhiReport,
    SRhoAuditReport,
    Table1Report,
)
from zeros.explicit_formula import psi_error_audit, s_rho_diff_audit
from zeros.zero_table import load_zeros

logger = logging.getLogger(__name__)

DEFAULT_H = "X^0.55"
DEFAULT_PSI_H = "X^0.6"


def status(config, message=""):
    """Human-readable progress line on stderr"""
    if not config.quiet:
        print(message, file=sys.stderr)


def banner(config, title):
    status(config, f"\n{'=' * 60}")
    status(config, title)
    status(config, f"{'=' * 60}")


def _pair(config):
    return PowerPair(config.int_param("k"), config.int_param("l"))


def _window(config, default_h=None):
    config.require("x")
    X = config.x
    spec = config.h if config.h is not None else default_h
    if spec is None:
        raise ConfigError(f"{config.subcommand} needs --h")
    return X, resolve_interval_length(spec, X)


def _zeros(config):
    if config.zeros is None:
        raise ConfigError(f"{config.subcommand} needs --zeros or WG_ZEROS_PATH")
    return load_zeros(config.zeros, skip_header=config.skip_header)


def run_exponents(config, storage):
    pair = _pair(config)
    report = exponent_report(pair)
    payload = report.to_dict()
    if config.x is not None:
        rng = admissible_H(pair, config.x, config.eps)
        payload["admissible_H"] = AdmissibleRangeReport(
            X=config.x, eps=config.eps, lower=rng.lower, upper=rng.upper,
            lower_exponent=rng.lower_exponent, upper_exponent=rng.upper_exponent, empty=rng.empty)
    banner(config, f"EXPONENTS {pair}")
    status(config, f"Theta = {payload['Theta']}  best method: {report.best_label}")
    result = ExponentsReport(**payload)
    if config.out:
        status(config, f"✓ Report saved to: {storage.save_json(result, config.out)}")
    return result


def run_table1(config, storage):
    df = table1(config.k_max, config.l_max)
    path = storage.save_to_csv(df, config.out or "table1.csv", index=True)
    banner(config, "BEST EXPONENT TABLE")
    status(config, f"✓ {len(df)} x {len(df.columns)} grid saved to: {path}")
    labels = {str(ell): {col: str(row[col]) for col in df.columns} for ell, row in df.iterrows()}
    return Table1Report(path=str(path.resolve()), k_max=config.k_max, l_max=config.l_max, labels=labels)


def run_solve_phi(config, storage):
    config.require("l")
    ell = config.l
    k = config.k if config.k is not None else 1.0
    first, second = solve_lambda1(ell), solve_lambda2(k, ell)
    return SolvePhiReport(
        l=ell, k=k,
        lambda1=first.lambda_star, lambda2=second.lambda_star,
        residuals={"lambda1": first.residual, "lambda2": second.residual},
        closed_form_deltas={"lambda1": first.lambda_star - lambda1(ell),
                            "lambda2": second.lambda_star - lambda2(k, ell)},
        branches={"lambda1": first.branch_used.value, "lambda2": second.branch_used.value},
    )


def run_sieve_experiment_cmd(config, storage):
    pair = _pair(config)
    X, H = _window(config, DEFAULT_H)
    banner(config, f"SIEVE EXPERIMENT {pair}")
    status(config, f"X = {X}, H = {H}, weight = {config.weight}, threads = {config.threads}")
    record = run_sieve_experiment(pair, X, H, weight=config.weight, threads=config.threads,
                                  progress=not config.quiet)
    ledger = storage.append_ledger([record.ledger_row()], config.ledger, LEDGER_COLUMNS)
    result = SieveExperimentReport(**record.ledger_row(), weight=record.weight,
                                   ledger=str(ledger.resolve()))
    path = storage.save_json(result, config.out or "sieve_experiment.json")
    status(config, f"ratio = {record.ratio:.6f} in {record.wall_time:.2f}s")
    status(config, f"✓ Report saved to: {path}")
    status(config, f"✓ Ledger: {ledger}")
    return result


def run_main_term_check(config, storage):
    pair = _pair(config)
    X, H = _window(config)
    check = main_term_check(pair, X, H)
    return MainTermCheckReport(k=pair.k, l=pair.ell, X=X, H=H, C=main_term_constant(pair),
                               **check.to_dict())


def run_lattice_count(config, storage):
    pair = _pair(config)
    X, H = _window(config)
    count = lattice_count(pair, X, H)
    scale = H * X ** pair.exponent
    return LatticeCountReport(k=pair.k, l=pair.ell, X=X, H=H, count=count, scale=scale,
                              ratio=count / scale, power_count=power_count(pair.ell, X, H))


def run_psi_interval(config, storage):
    X, H = _window(config, DEFAULT_PSI_H)
    check = psi_short_interval_check(X, H)
    banner(config, "PSI IN A SHORT INTERVAL")
    status(config, f"psi(X + H) - psi(X) = {check.difference:.6f} for H = {H} (X^{check.exponent:.4f})")
    status(config, f"ratio = {check.ratio:.6f}, fitted constant = {check.fitted_constant:.4g}")
    return PsiIntervalReport(**check.to_dict())


def run_explicit_formula(config, storage):
    config.require("x", "t")
    table = _zeros(config)
    grid = int(config.grid) if config.grid else 1
    xs = [float(config.x)] if grid == 1 else list(np.linspace(config.x, 2 * config.x, grid))
    banner(config, "EXPLICIT FORMULA")
    status(config, f"{len(table)} zeros up to {table.max_height:.6f}, T = {config.t}, {len(xs)} points")
    records = psi_error_audit(xs, config.t, table, lower_order=config.lower_order,
                              threads=config.threads)
    worst = max(records, key=lambda r: r.fitted_constant)
    if config.out:
        status(config, f"✓ Points saved to: {storage.save_to_csv([r.to_dict() for r in records], config.out)}")
    return ExplicitFormulaReport(
        **worst.to_dict(), zeros=str(config.zeros), zeros_used=table.count_upto(config.t),
        max_fitted_constant=worst.fitted_constant,
        points=[PsiPoint(**r.to_dict()) for r in records] if grid > 1 else [],
    )


def run_s_rho_audit(config, storage):
    pair = _pair(config)
    X, H = _window(config)
    table = _zeros(config)
    audit = s_rho_diff_audit(pair, X, H, table, config.count, threads=config.threads)
    result = SRhoAuditReport(**audit.to_dict())
    if config.out:
        status(config, f"✓ Report saved to: {storage.save_json(result, config.out)}")
    return result


def run_osc_audit_cmd(config, storage):
    grid = config.grid or "builtin"
    cases = builtin_audit_grid() if grid == "builtin" else load_audit_grid(grid)
    banner(config, "OSCILLATORY INTEGRAL AUDIT")
    status(config, f"{len(cases)} cases, tol = {config.tol}, threads = {config.threads}")
    df = run_osc_audit(cases, tol=config.tol, threads=config.threads, progress=not config.quiet)
    path = storage.save_to_csv(df, config.out or "osc_audit.csv")
    status(config, f"✓ Report saved to: {path}")
    closed = df["closed_form_error"].dropna()
    return OscAuditReport(
        path=str(path.resolve()), cases=len(cases), checks=len(df),
        max_ratio=float(df["ratio"].max()),
        max_ratio_by_branch={b: float(v) for b, v in df.groupby("branch")["ratio"].max().items()},
        max_closed_form_error=float(closed.max()) if len(closed) else None,
    )


def run_plot_data(config, storage):
    config.require("kind")
    kind = config.kind
    if kind == "phi":
        series = plot_data.phi_series(config.points or 1001)
    elif kind == "ratio-vs-x":
        pair = _pair(config)
        top = config.x or 10 ** 6
        xs = plot_data.geometric_points(10 ** 4, top, config.points or 6)
        series = plot_data.ratio_vs_x_series(pair, xs, config.h or DEFAULT_H, threads=config.threads)
    elif kind == "explicit-error":
        config.require("x")
        table = _zeros(config)
        heights = plot_data.height_points(table, config.points or 20)
        series = plot_data.explicit_error_series(table, config.x, heights)
    else:
        X, H = _window(config)
        series = plot_data.singular_series_series(X, H, config.P)

    path, df = plot_data.emit_plot_data(series, config.out or f"plot_{kind}.csv", storage)
    status(config, f"✓ Plot data saved to: {path}")
    html = None
    if config.html:
        html = plot_data.render_html(df, path.with_suffix(".html"), kind)
        status(config, f"✓ HTML saved to: {html}")
    return PlotDataReport(kind=kind, path=str(path.resolve()), rows=len(df),
                          html=str(Path(html).resolve()) if html else None)


HANDLERS = {
    "exponents": run_exponents,
    "table1": run_table1,
    "solve-phi": run_solve_phi,
    "sieve-experiment": run_sieve_experiment_cmd,
    "main-term-check": run_main_term_check,
    "lattice-count": run_lattice_count,
    "psi-interval": run_psi_interval,
    "explicit-formula": run_explicit_formula,
    "s-rho-audit": run_s_rho_audit,
    "osc-audit": run_osc_audit_cmd,
    "plot-data": run_plot_data,
}


def _add(parser, *names, **kwargs):
    for name in names:
        parser.add_argument(f"--{name}", default=None, **kwargs)


def build_parser():
    """Argument parser with one subparser per subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="key=value file; flags override it")
    common.add_argument("--threads", type=int, default=None, help="Worker threads (default: 1)")
    common.add_argument("--quiet", action="store_true", default=None, help="No status lines or progress bars")
    common.add_argument("--verbose", action="store_true", default=None, help="Debug logging")
    common.add_argument("--results-dir", default=None, help="Directory for reports (default: results)")
    common.add_argument("--out", default=None, help="Output file name")

    parser = argparse.ArgumentParser(
        description="Short-interval Waring-Goldbach verification workbench",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Threshold exponent for p + n^2
  wg-bench exponents --k 1 --l 2

  # Best-method table
  wg-bench table1 --out table1.csv

  # Window sum against the main term
  wg-bench sieve-experiment --k 1 --l 2 --x 1e7 --h X^0.55

  # Chebyshev psi over (X, X + X^0.6]
  wg-bench psi-interval --x 1e7

  # Explicit formula with a zero table
  wg-bench explicit-formula --zeros zeros1.txt --x 100000 --t 1000 --grid 50
        """,
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    parsers = {name: sub.add_parser(name, parents=[common]) for name in SUBCOMMANDS}

    for name in ("exponents", "sieve-experiment", "main-term-check", "lattice-count",
                 "s-rho-audit", "plot-data", "solve-phi"):
        _add(parsers[name], "k", "l", type=float)
    for name in ("exponents", "sieve-experiment", "main-term-check", "lattice-count",
                 "psi-interval", "explicit-formula", "s-rho-audit", "plot-data"):
        _add(parsers[name], "x", help="Integer, also 1e7 or 10**7")
    for name in ("sieve-experiment", "main-term-check", "lattice-count", "psi-interval",
                 "s-rho-audit", "plot-data"):
        _add(parsers[name], "h", help="Integer or exponent form such as X^0.55")
    for name in ("explicit-formula", "s-rho-audit", "plot-data"):
        _add(parsers[name], "zeros", help="Zero table, one ordinate per line (default: $WG_ZEROS_PATH)")
        parsers[name].add_argument("--skip-header", action="store_true", default=None)

    _add(parsers["exponents"], "eps", type=float)
    _add(parsers["table1"], "k-max", "l-max", type=int)
    _add(parsers["sieve-experiment"], "weight", choices=["logp", "lambda"])
    _add(parsers["sieve-experiment"], "ledger", help="Ledger CSV (default: ledger.csv)")
    _add(parsers["explicit-formula"], "t", type=float)
    _add(parsers["explicit-formula"], "grid", help="Number of points in [x, 2x]")
    parsers["explicit-formula"].add_argument("--lower-order", action="store_true", default=None)
    _add(parsers["s-rho-audit"], "count", type=int)
    _add(parsers["osc-audit"], "grid", help="builtin or a JSON case list")
    _add(parsers["osc-audit"], "tol", type=float)
    _add(parsers["plot-data"], "kind", choices=list(PLOT_KINDS))
    _add(parsers["plot-data"], "points", type=int)
    _add(parsers["plot-data"], "P", type=int)
    parsers["plot-data"].add_argument("--html", action="store_true", default=None)
    return parser


def _emit(payload):
    print(json.dumps(payload, indent=2))


def _emit_error(error, subcommand):
    _emit(ErrorReport(error=type(error).__name__, message=str(error), subcommand=subcommand).model_dump())


def run(config):
    """
    Dispatch a validated configuration to its subcommand

    Args:
        config (ExperimentConfig): Validated configuration

    Returns:
        int: Exit status; 0 success, 2 invalid input, 1 I/O failure
    """
    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    storage = DataStorage(config.results_dir)
    try:
        result = HANDLERS[config.subcommand](config, storage)
    except WorkbenchError as e:
        logger.debug("%s failed", config.subcommand, exc_info=True)
        _emit_error(e, config.subcommand)
        return 2
    except OSError as e:
        _emit_error(e, config.subcommand)
        return 1

    _emit(result.model_dump(mode="json"))
    return 0


def main(argv=None):
    """Main entry point for the workbench"""
    args = build_parser().parse_args(argv)
    flags = {key: value for key, value in vars(args).items() if key not in ("subcommand", "config")}
    try:
        config = build_config(args.subcommand, flags, args.config)
    except WorkbenchError as e:
        _emit_error(e, args.subcommand)
        return 2
    except OSError as e:
        _emit_error(e, args.subcommand)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
