"""Tests for the oscillation-aware quadrature and the exponential integrals"""

import math

import mpmath
import numpy as np
import pytest

from exponents.exponent_calculus import PowerPair
from oscillatory.quadrature import (
    OscIntegralCase,
    eval_osc,
    integrate_oscillatory,
    osc_closed_form,
)
from utils.errors import ConvergenceError, DomainError


def fine_grid_oracle(case, pieces=240):
    """mpmath quadrature over a geometric grid of subintervals"""
    mpmath.mp.dps = 20
    s = mpmath.mpc(case.alpha, case.gamma / case.pair.k)
    inv_l = mpmath.mpf(1) / case.pair.ell

    def f(u):
        return u ** (s - 1) * mpmath.expjpi(2 * case.n * (case.Q - u) ** inv_l)

    points = [mpmath.mpf(float(x)) for x in np.geomspace(case.U, case.V, pieces + 1)]
    return complex(mpmath.quad(f, points))


def substituted_oracle(case, pieces=400):
    """mpmath quadrature in t = (Q - u)^(1/l) on a uniform grid"""
    mpmath.mp.dps = 20
    ell = case.pair.ell
    s = mpmath.mpc(case.alpha, case.gamma / case.pair.k)

    def f(t):
        return ell * t ** (ell - 1) * (case.Q - t ** ell) ** (s - 1) * mpmath.expjpi(2 * case.n * t)

    t_lo = (case.Q - case.V) ** (1.0 / ell)
    t_hi = (case.Q - case.U) ** (1.0 / ell)
    points = [mpmath.mpf(float(x)) for x in np.linspace(t_lo, t_hi, pieces + 1)]
    return complex(mpmath.quad(f, points))


@pytest.mark.parametrize("alpha, gamma", [(0.5, 30.0), (1.0, 1.0), (0.0, 1000.0), (-0.5, 10_000.0)])
def test_zero_frequency_matches_closed_form(alpha, gamma):
    case = OscIntegralCase(PowerPair(1, 2), alpha, gamma, 0, 1e4, 1.0, 1e4)
    value = eval_osc(case, tol=1e-9)
    exact = osc_closed_form(case)
    assert abs(value - exact) <= 1e-9 * (1 + abs(exact))


def test_orthogonality_of_integer_frequencies():
    for m in (1, 2, 7, 50):
        value, err = integrate_oscillatory(
            lambda u, m=m: np.exp(2j * math.pi * m * u), [0.0, 1.0],
            lambda lo, hi, m=m: np.full_like(lo, float(m)), 1e-12)
        assert abs(value) <= 1e-12
        assert err <= 1e-12


def test_matches_extended_precision_oracle():
    case = OscIntegralCase(PowerPair(1, 2), 0.5, 50.0, 3, 1e4, 10.0, 1e3)
    value = eval_osc(case, tol=1e-10)
    oracle = fine_grid_oracle(case)
    assert abs(value - oracle) <= 1e-6 * abs(oracle)


def test_window_reaching_Q_uses_substitution():
    case = OscIntegralCase(PowerPair(2, 3), 1.0, 30.0, -40, 1e3, 500.0, 1e3)
    value = eval_osc(case, tol=1e-10)
    oracle = substituted_oracle(case)
    assert abs(value - oracle) <= 1e-6 * max(abs(oracle), 1.0)


def test_halving_tolerance_is_stable():
    case = OscIntegralCase(PowerPair(3, 2), 0.5, 1000.0, 3, 1e3, math.sqrt(1e3), 500.0)
    coarse = eval_osc(case, tol=1e-6)
    fine = eval_osc(case, tol=5e-7)
    assert abs(coarse - fine) <= 1e-6 * (1 + abs(fine))


def test_tolerance_range():
    case = OscIntegralCase(PowerPair(1, 2), 0.5, 30.0, 0, 100.0, 1.0, 100.0)
    with pytest.raises(DomainError):
        eval_osc(case, tol=1e-3)
    with pytest.raises(DomainError):
        eval_osc(case, tol=1e-13)


def test_case_validation():
    pair = PowerPair(1, 2)
    with pytest.raises(DomainError):
        OscIntegralCase(pair, 1.5, 10.0, 0, 100.0, 1.0, 100.0)
    with pytest.raises(DomainError):
        OscIntegralCase(pair, 0.5, 0.5, 0, 100.0, 1.0, 100.0)
    with pytest.raises(DomainError):
        OscIntegralCase(pair, 0.5, 10.0, 0, 100.0, 50.0, 10.0)
    with pytest.raises(DomainError):
        OscIntegralCase(pair, 0.5, 10.0, 0.5, 100.0, 1.0, 100.0)
    with pytest.raises(DomainError):
        osc_closed_form(OscIntegralCase(pair, 0.5, 10.0, 3, 100.0, 1.0, 100.0))


def test_non_convergence_reports_partial_value():
    with pytest.raises(ConvergenceError) as info:
        integrate_oscillatory(lambda u: 1.0 / u + 0j, [0.0, 1.0],
                              lambda lo, hi: np.zeros_like(lo), 1e-10)
    assert info.value.partial is not None
    assert info.value.error_estimate > 0
