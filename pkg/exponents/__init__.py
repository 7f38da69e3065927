"""Exponent calculus and zero-density exponents for the short-interval asymptotic"""

from .piecewise import PiecewiseRealFunction
from .exponent_calculus import (
    AdmissibleRange,
    ExponentReport,
    PowerPair,
    admissible_H,
    b_factor,
    best_label,
    exponent_report,
    lambda1,
    lambda2,
    table1,
    theta_A,
    theta_B,
    theta_C,
    theta_LZ,
)
from .density_exponents import (
    PhiEquationSolution,
    c_alpha,
    h_max,
    phi,
    phi_shift_margin,
    solve_lambda1,
    solve_lambda2,
)

__all__ = [
    'PiecewiseRealFunction', 'PowerPair', 'ExponentReport', 'AdmissibleRange',
    'lambda1', 'lambda2', 'theta_LZ', 'theta_A', 'theta_B', 'theta_C',
    'best_label', 'exponent_report', 'table1', 'admissible_H', 'b_factor',
    'PhiEquationSolution', 'phi', 'c_alpha', 'h_max', 'solve_lambda1',
    'solve_lambda2', 'phi_shift_margin',
]
