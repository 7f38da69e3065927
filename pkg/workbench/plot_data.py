"""
Plot Data
Tidy (series, label, x, y) tables for external plotting, with optional
HTML rendering through plotly
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import pandas as pd
import plotly.express as px

from arith.prime_sieve import psi
from arith.representation import run_sieve_experiment
from arith.singular_series import singular_series_many
from exponents.density_exponents import phi
from utils.errors import DomainError
from utils.formatting import resolve_interval_length
from zeros.explicit_formula import psi_explicit

logger = logging.getLogger(__name__)

PLOT_COLUMNS = ["series", "label", "x", "y"]


@dataclass(frozen=True)
class PlotSeries:
    """One labelled curve"""

    name: str
    label: str
    xs: Sequence[float]
    ys: Sequence[float]


def to_frame(series):
    """
    Stack series into one tidy DataFrame

    Args:
        series (list): PlotSeries objects, at least one

    Returns:
        pd.DataFrame: Columns series, label, x, y
    """
    if not series:
        raise DomainError("plot data needs at least one series")
    frames = []
    for s in series:
        if len(s.xs) != len(s.ys):
            raise DomainError(f"series {s.name}: {len(s.xs)} x values but {len(s.ys)} y values")
        frames.append(pd.DataFrame({"series": s.name, "label": s.label,
                                    "x": np.asarray(s.xs, dtype=np.float64),
                                    "y": np.asarray(s.ys, dtype=np.float64)}))
    return pd.concat(frames, ignore_index=True)[PLOT_COLUMNS]


def emit_plot_data(series, path, storage):
    """
    Write series as tidy CSV

    Args:
        series (list): PlotSeries objects
        path (str): Output file name, relative to the storage base directory
        storage (DataStorage): Result storage

    Returns:
        tuple: (Path, pd.DataFrame)
    """
    df = to_frame(series)
    return storage.save_to_csv(df, path), df


def render_html(df, path, title):
    """Render a tidy plot table as an interactive plotly line chart"""
    fig = px.line(df, x="x", y="y", color="label", title=title)
    fig.write_html(str(path))
    return path


def phi_series(points=1001):
    """phi sampled on [0, 1]"""
    lams = np.linspace(0.0, 1.0, points)
    return [PlotSeries("phi", "phi(lambda)", lams, [phi(float(v)) for v in lams])]


def ratio_vs_x_series(pair, xs, h_spec, threads=1):
    """Window sum over main term as X grows with H given by h_spec"""
    ratios = []
    for X in xs:
        H = resolve_interval_length(h_spec, X)
        ratios.append(run_sieve_experiment(pair, X, H, threads=threads).ratio)
    return [PlotSeries("ratio", f"{pair} H={h_spec}", list(xs), ratios)]


def explicit_error_series(table, x, heights):
    """|psi(x) - psi_explicit(x, T)| as T grows"""
    direct = psi(x)
    errors = [abs(psi_explicit(x, T, table).value - direct) for T in heights]
    return [PlotSeries("explicit_error", f"x={x}", list(heights), errors)]


def singular_series_series(X, H, P):
    """Truncated singular series over X < N <= X + H"""
    Ns = np.arange(X + 1, X + H + 1, dtype=np.int64)
    values = singular_series_many(Ns, P)
    mean = float(np.mean(values))
    logger.info("mean singular series over (%d, %d]: %.6f", X, X + H, mean)
    return [PlotSeries("singular_series", f"P={P}", Ns, values)]


def geometric_points(lo, hi, points):
    """Distinct integers spread geometrically over [lo, hi]"""
    values = np.unique(np.round(np.geomspace(lo, hi, points)).astype(np.int64))
    return [int(v) for v in values if v >= 4]


def height_points(table, points):
    """Truncation heights spread geometrically between the first zero and the table top"""
    if points < 2:
        return [table.max_height]
    return [float(T) for T in np.geomspace(table.gammas[0], table.max_height, points)]
