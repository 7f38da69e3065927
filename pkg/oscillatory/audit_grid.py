"""
Oscillatory Audit Grid
Built-in grid of exponential-integral cases and the audit runner
"""

import itertools
import json
import logging
import math
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from exponents.exponent_calculus import PowerPair
from oscillatory.bounds import exp_int_bounds
from oscillatory.quadrature import OscIntegralCase, eval_osc, osc_closed_form
from utils.errors import ConfigError
from utils.range_splitter import RangeSplitter, ordered_map

logger = logging.getLogger(__name__)

AUDIT_PAIRS = [(1, 2), (2, 3), (3, 2)]
AUDIT_HEIGHTS = [100.0, 1_000.0, 10_000.0]
AUDIT_GAMMAS = [1.0, 30.0, 1_000.0, 10_000.0]
AUDIT_FREQUENCIES = [0, 3, -40, 1000]
AUDIT_ALPHAS = [1.0, 0.5, 0.0, -0.5]
LARGE_N_GAMMAS = [1.0, 2.0]
LARGE_N_FREQUENCIES = [-1000, -200, 200, 1000]

REPORT_COLUMNS = ["k", "l", "alpha", "gamma", "n", "Q", "U", "V",
                  "computed_abs", "bound", "branch", "ratio", "closed_form_error"]


def builtin_audit_grid():
    """
    Deterministic grid of exponential-integral cases

    Covers every pair in AUDIT_PAIRS, heights Q from 100 to 10^4, gamma up to
    10^4 and |n| up to 1000, plus small-Q cases where the large-n estimate
    applies.

    Returns:
        list: OscIntegralCase objects
    """
    cases = []
    alphas = itertools.cycle(AUDIT_ALPHAS)
    for (k, ell), Q, gamma, n in itertools.product(
            AUDIT_PAIRS, AUDIT_HEIGHTS, AUDIT_GAMMAS, AUDIT_FREQUENCIES):
        pair = PowerPair(k, ell)
        for U, V in [(1.0, Q), (math.sqrt(Q), Q / 2.0)]:
            cases.append(OscIntegralCase(pair, next(alphas), gamma, n, Q, U, V))
    for (k, ell), gamma, n in itertools.product(AUDIT_PAIRS, LARGE_N_GAMMAS, LARGE_N_FREQUENCIES):
        cases.append(OscIntegralCase(PowerPair(k, ell), next(alphas), gamma, n, 100.0, 1.0, 100.0))
    return cases


def load_audit_grid(path):
    """
    Load cases from a JSON list of objects with keys k, l, alpha, gamma, n, Q, U, V

    Args:
        path (str or Path): Grid file

    Returns:
        list: OscIntegralCase objects
    """
    with open(Path(path), "r", encoding="utf-8") as f:
        entries = json.load(f)
    if not isinstance(entries, list) or not entries:
        raise ConfigError(f"audit grid {path} must be a non-empty JSON list")
    cases = []
    for i, entry in enumerate(entries):
        try:
            cases.append(OscIntegralCase(
                PowerPair(int(entry["k"]), int(entry["l"])), float(entry["alpha"]),
                float(entry["gamma"]), int(entry["n"]), float(entry["Q"]),
                float(entry["U"]), float(entry["V"])))
        except (KeyError, TypeError) as e:
            raise ConfigError(f"audit grid {path}: entry {i} is malformed ({e})") from e
    return cases


def audit_case(case, tol=1e-8):
    """
    Evaluate one case and check every applicable branch

    Returns:
        list: Report rows, one per applicable branch
    """
    value = eval_osc(case, tol)
    closed_form_error = math.nan
    if case.n == 0:
        closed_form_error = abs(value - osc_closed_form(case))
    rows = []
    for check in exp_int_bounds(case, tol, value=value):
        row = case.to_dict()
        row.update({
            "computed_abs": check.computed_abs,
            "bound": check.bound_value,
            "branch": check.branch.value,
            "ratio": check.fitted_ratio,
            "closed_form_error": closed_form_error,
        })
        rows.append(row)
    return rows


def run_osc_audit(cases, tol=1e-8, threads=1, progress=False):
    """
    Audit a list of cases

    Args:
        cases (list): OscIntegralCase objects
        tol (float): Quadrature tolerance
        threads (int): Worker threads
        progress (bool): Show a progress bar

    Returns:
        pd.DataFrame: One row per case and applicable branch, in case order
    """
    chunks = RangeSplitter(0, len(cases) - 1).split_for_workers(max(1, threads))
    with tqdm(total=len(cases), desc="osc audit", disable=not progress) as bar:
        def work(chunk):
            lo, hi = chunk
            rows = []
            for case in cases[lo:hi + 1]:
                rows.extend(audit_case(case, tol))
                bar.update(1)
            return rows
        results = ordered_map(work, chunks, threads=threads)
    df = pd.DataFrame([row for part in results for row in part], columns=REPORT_COLUMNS)
    logger.info("osc audit: %d cases, %d checks, max ratio %.4g",
                len(cases), len(df), df["ratio"].max() if len(df) else 0.0)
    return df
