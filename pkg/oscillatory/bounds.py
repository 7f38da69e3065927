"""
Oscillatory Bounds
Fitted-constant checks of the exponential-integral estimate and of the
first and second derivative tests
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np

from oscillatory.quadrature import eval_osc, integrate_oscillatory
from utils.errors import DomainError

logger = logging.getLogger(__name__)


class BoundBranch(str, enum.Enum):
    ALPHA_POS = "alpha_pos"
    ALPHA_NEG = "alpha_neg"
    LARGE_N = "large_n"
    FIRST_DERIVATIVE = "first_derivative"
    SECOND_DERIVATIVE = "second_derivative"


@dataclass(frozen=True)
class BoundCheck:
    """Computed |integral| against one bound shape"""

    computed_abs: float
    bound_value: float
    branch: BoundBranch
    fitted_ratio: float

    @classmethod
    def of(cls, computed_abs, bound_value, branch):
        ratio = computed_abs / bound_value if computed_abs > 0 else 0.0
        return cls(computed_abs=computed_abs, bound_value=bound_value,
                   branch=BoundBranch(branch), fitted_ratio=ratio)


def large_n_threshold(case):
    """l Q^(1 - 1/l) |gamma|; the large-n bound needs |n| above it"""
    ell = case.pair.ell
    return ell * case.Q ** (1.0 - 1.0 / ell) * abs(case.gamma)


def exp_int_bound_values(case):
    """
    Every bound of the exponential-integral estimate applicable to a case

    Args:
        case (OscIntegralCase): Integral parameters

    Returns:
        dict: BoundBranch -> bound value, with L = log Q
    """
    L = math.log(case.Q)
    root_gamma = math.sqrt(abs(case.gamma))
    values = {}
    if case.alpha >= 0:
        values[BoundBranch.ALPHA_POS] = case.V ** case.alpha * L / root_gamma
    if case.alpha <= 0:
        values[BoundBranch.ALPHA_NEG] = case.U ** case.alpha * L / root_gamma
    if abs(case.n) > large_n_threshold(case):
        values[BoundBranch.LARGE_N] = case.Q ** (1.0 - 1.0 / case.pair.ell) / abs(case.n)
    return values


def exp_int_bounds(case, tol=1e-8, value=None):
    """
    Checks of every applicable branch

    Args:
        case (OscIntegralCase): Integral parameters
        tol (float): Quadrature tolerance
        value (complex): Precomputed integral, evaluated when omitted

    Returns:
        list: BoundCheck per applicable branch
    """
    if value is None:
        value = eval_osc(case, tol)
    computed = abs(value)
    return [BoundCheck.of(computed, bound, branch)
            for branch, bound in exp_int_bound_values(case).items()]


def exp_int_bound(case, tol=1e-8):
    """Check against the tightest applicable branch"""
    return min(exp_int_bounds(case, tol), key=lambda check: check.bound_value)


@dataclass(frozen=True)
class Monomial:
    """c x^p on an interval of positive reals"""

    coefficient: float
    power: float

    def __call__(self, x):
        return self.coefficient * np.power(x, self.power)

    def derivative(self, order=1):
        c, p = self.coefficient, self.power
        for _ in range(order):
            c, p = c * p, p - 1
        return Monomial(c, p)


def _parse_family(spec, role):
    if isinstance(spec, Monomial):
        return spec
    kind, *params = spec
    if kind == "monomial" and len(params) == 2:
        return Monomial(float(params[0]), float(params[1]))
    if kind == "constant" and len(params) == 1:
        return Monomial(float(params[0]), 0.0)
    raise DomainError(f"unsupported {role} family {spec!r}; use ('monomial', c, p) or ('constant', c)")


def bv_norm(g, a, b):
    """sup |g| + total variation of a monotone g over [a, b]"""
    ga, gb = float(g(a)), float(g(b))
    return max(abs(ga), abs(gb)) + abs(gb - ga)


def derivative_test_demo(kind, f_spec, g_spec, interval, tol=1e-10):
    """
    Compare the integral of g(x) e(f(x)) with the derivative-test bound

    The first test uses lambda = min |f'| and the bound ||g|| / lambda; the
    second uses lambda = min |f''| and ||g|| / sqrt(lambda).

    Args:
        kind (str): "first" or "second"
        f_spec: Phase, ("monomial", c, p) meaning c x^p
        g_spec: Amplitude, ("monomial", a, q) or ("constant", a)
        interval (tuple): (a, b) with 0 <= a < b

    Returns:
        BoundCheck: Computed magnitude, bound and fitted ratio
    """
    a, b = map(float, interval)
    if not 0 <= a < b:
        raise DomainError(f"need 0 <= a < b, got {interval}")
    f = _parse_family(f_spec, "phase")
    g = _parse_family(g_spec, "amplitude")
    if a == 0 and (f.power < 1 or g.power < 0):
        raise DomainError("monomials with negative exponents need a > 0")

    if kind == "first":
        order, branch = 1, BoundBranch.FIRST_DERIVATIVE
    elif kind == "second":
        order, branch = 2, BoundBranch.SECOND_DERIVATIVE
    else:
        raise DomainError(f"kind must be 'first' or 'second', got {kind!r}")

    dk = f.derivative(order)
    lam = min(abs(float(dk(a))), abs(float(dk(b))))
    if lam <= 0:
        raise DomainError(f"derivative of order {order} vanishes on {interval}; lambda must be positive")

    df = f.derivative(1)

    def integrand(x):
        return g(x) * np.exp(2j * math.pi * f(x))

    def slope_bound(lo, hi):
        return np.maximum(np.abs(df(lo)), np.abs(df(hi)))

    breaks = np.linspace(a, b, 9)
    value, _ = integrate_oscillatory(integrand, breaks, slope_bound, tol)
    norm = bv_norm(g, a, b)
    bound = norm / lam if order == 1 else norm / math.sqrt(lam)
    check = BoundCheck.of(abs(value), bound, branch)
    logger.debug("%s derivative test: |I|=%.6g bound=%.6g", kind, check.computed_abs, bound)
    return check
