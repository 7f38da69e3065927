"""
Oscillatory Quadrature
Gauss-Legendre panel integration with panels sized to the local oscillation
length, and the exponential integrals u^(alpha + i gamma/k - 1) e(n (Q-u)^(1/l))
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from utils.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

LOW_ORDER = 10
HIGH_ORDER = 20
CYCLES_PER_PANEL = 0.5
MAX_REFINEMENTS = 30
MAX_PANELS = 5_000_000
PANEL_CHUNK = 4096
ROUNDOFF_FLOOR = 1e-14
MIN_TOL, MAX_TOL = 1e-12, 1e-4

_LOW_NODES, _LOW_WEIGHTS = leggauss(LOW_ORDER)
_HIGH_NODES, _HIGH_WEIGHTS = leggauss(HIGH_ORDER)


def _panel_rules(func, lo, hi):
    """Low and high order estimates plus the absolute integral on each panel"""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    high_vals = func(mid[:, None] + half[:, None] * _HIGH_NODES[None, :])
    low_vals = func(mid[:, None] + half[:, None] * _LOW_NODES[None, :])
    high = half * (high_vals @ _HIGH_WEIGHTS)
    low = half * (low_vals @ _LOW_WEIGHTS)
    magnitude = half * (np.abs(high_vals) @ _HIGH_WEIGHTS)
    return high, np.abs(high - low), magnitude


def _initial_panels(breaks, slope_bound):
    breaks = np.asarray(breaks, dtype=np.float64)
    lo, hi = breaks[:-1], breaks[1:]
    bound = np.asarray(slope_bound(lo, hi), dtype=np.float64)
    counts = np.maximum(1, np.ceil((hi - lo) * bound / CYCLES_PER_PANEL)).astype(np.int64)
    if counts.sum() > MAX_PANELS:
        raise ConvergenceError(f"oscillation needs {int(counts.sum())} panels, limit is {MAX_PANELS}")
    edges_lo, edges_hi = [], []
    for a, b, m in zip(lo, hi, counts):
        edges = np.linspace(a, b, int(m) + 1)
        edges_lo.append(edges[:-1])
        edges_hi.append(edges[1:])
    return np.concatenate(edges_lo), np.concatenate(edges_hi)


def integrate_oscillatory(func, breaks, slope_bound, tol):
    """
    Integrate a vectorised complex integrand over [breaks[0], breaks[-1]]

    Every coarse interval of ``breaks`` is cut into panels holding at most
    half an oscillation according to ``slope_bound``. Each panel compares
    10- and 20-point Gauss-Legendre rules; failing panels are bisected.

    Args:
        func (callable): Maps an array of abscissae to complex values
        breaks (array-like): Ascending coarse grid
        slope_bound (callable): (lo, hi) arrays -> bound on |phase'| in cycles
            per unit length over each interval
        tol (float): Absolute tolerance for the whole integral

    Returns:
        tuple: (value, error_estimate)
    """
    lo, hi = _initial_panels(breaks, slope_bound)
    total_width = float(breaks[-1] - breaks[0])
    if total_width <= 0:
        return 0j, 0.0

    accepted_re, accepted_im, error_parts = [], [], []
    for _ in range(MAX_REFINEMENTS + 1):
        failed_lo, failed_hi = [], []
        for start in range(0, lo.size, PANEL_CHUNK):
            clo, chi = lo[start:start + PANEL_CHUNK], hi[start:start + PANEL_CHUNK]
            value, err, magnitude = _panel_rules(func, clo, chi)
            allowed = np.maximum(tol * (chi - clo) / total_width, ROUNDOFF_FLOOR * magnitude)
            ok = err <= allowed
            accepted_re.extend(value[ok].real.tolist())
            accepted_im.extend(value[ok].imag.tolist())
            error_parts.extend(err[ok].tolist())
            failed_lo.append(clo[~ok])
            failed_hi.append(chi[~ok])
        lo, hi = np.concatenate(failed_lo), np.concatenate(failed_hi)
        if lo.size == 0:
            break
        if lo.size > MAX_PANELS:
            break
        mid = 0.5 * (lo + hi)
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])

    partial = complex(math.fsum(accepted_re), math.fsum(accepted_im))
    if lo.size:
        value, err, _ = _panel_rules(func, lo, hi)
        partial += complex(math.fsum(value.real), math.fsum(value.imag))
        estimate = math.fsum(error_parts) + float(np.sum(err))
        raise ConvergenceError(
            f"{lo.size} panels still above tolerance after {MAX_REFINEMENTS} refinements",
            partial=partial, error_estimate=estimate)
    return partial, math.fsum(error_parts)


@dataclass(frozen=True)
class OscIntegralCase:
    """Integral of u^(alpha + i gamma/k - 1) e(n (Q - u)^(1/l)) over [U, V]"""

    pair: object
    alpha: float
    gamma: float
    n: int
    Q: float
    U: float
    V: float

    def __post_init__(self):
        if self.alpha > 1:
            raise DomainError(f"alpha must be <= 1, got {self.alpha}")
        if abs(self.gamma) < 1:
            raise DomainError(f"|gamma| must be >= 1, got {self.gamma}")
        if not 1 <= self.U <= self.V <= self.Q:
            raise DomainError(f"need 1 <= U <= V <= Q, got U={self.U}, V={self.V}, Q={self.Q}")
        if int(self.n) != self.n:
            raise DomainError(f"n must be an integer, got {self.n}")

    @property
    def s(self):
        return complex(self.alpha, self.gamma / self.pair.k)

    def to_dict(self):
        return {"k": self.pair.k, "l": self.pair.ell, "alpha": self.alpha, "gamma": self.gamma,
                "n": int(self.n), "Q": self.Q, "U": self.U, "V": self.V}


def osc_closed_form(case):
    """(V^s - U^s)/s, the value of the integral when n = 0"""
    if case.n != 0:
        raise DomainError("closed form only exists for n = 0")
    s = case.s
    return complex((np.exp(s * math.log(case.V)) - np.exp(s * math.log(case.U))) / s)


def _u_integrand(case):
    s1 = case.s - 1.0
    two_pi_n = 2.0 * math.pi * case.n
    inv_l = 1.0 / case.pair.ell

    def func(u):
        return np.exp(s1 * np.log(u) + 1j * two_pi_n * (case.Q - u) ** inv_l)
    return func


def _u_slope_bound(case):
    n_term = abs(case.n) / case.pair.ell
    g_term = abs(case.gamma) / (2.0 * math.pi * case.pair.k)
    exponent = 1.0 / case.pair.ell - 1.0

    def bound(lo, hi):
        return n_term * (case.Q - hi) ** exponent + g_term / lo
    return bound


def _t_integrand(case):
    # u = Q - t^l, du = -l t^(l-1) dt
    ell = case.pair.ell
    s1 = case.s - 1.0
    two_pi_n = 2.0 * math.pi * case.n

    def func(t):
        u = case.Q - t ** ell
        return ell * t ** (ell - 1) * np.exp(s1 * np.log(u) + 1j * two_pi_n * t)
    return func


def _t_slope_bound(case):
    ell = case.pair.ell
    g_term = abs(case.gamma) / (2.0 * math.pi * case.pair.k)

    def bound(lo, hi):
        return abs(case.n) + g_term * ell * hi ** (ell - 1) / (case.Q - hi ** ell)
    return bound


def _geometric_breaks(a, b):
    pieces = max(1, int(math.ceil(math.log2(b / a))))
    return np.geomspace(a, b, pieces + 1)


def eval_osc(case, tol=1e-8):
    """
    Evaluate the exponential integral of an OscIntegralCase

    The part with u <= Q/2 is integrated in u on a dyadic coarse grid; the
    part with u >= Q/2 is integrated in t = (Q - u)^(1/l), where the phase
    n t has bounded slope.

    Args:
        case (OscIntegralCase): Integral parameters
        tol (float): Tolerance in [1e-12, 1e-4]

    Returns:
        complex: Integral value with absolute error at most tol (1 + |value|)
    """
    if not MIN_TOL <= tol <= MAX_TOL:
        raise DomainError(f"tol must lie in [{MIN_TOL}, {MAX_TOL}], got {tol}")
    split = case.Q / 2.0
    parts = []
    share = tol / 2.0

    if case.U < min(case.V, split):
        breaks = _geometric_breaks(case.U, min(case.V, split))
        value, _ = integrate_oscillatory(_u_integrand(case), breaks, _u_slope_bound(case), share)
        parts.append(value)

    if case.V > max(case.U, split):
        t_lo = (case.Q - case.V) ** (1.0 / case.pair.ell)
        t_hi = (case.Q - max(case.U, split)) ** (1.0 / case.pair.ell)
        breaks = np.linspace(t_lo, t_hi, 17)
        value, _ = integrate_oscillatory(_t_integrand(case), breaks, _t_slope_bound(case), share)
        parts.append(value)

    result = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    logger.debug("eval_osc %s -> %r", case.to_dict(), result)
    return result
