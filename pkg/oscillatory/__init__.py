"""Oscillatory integrals and fitted-constant checks of their bounds"""

from .quadrature import OscIntegralCase, eval_osc, integrate_oscillatory, osc_closed_form
from .bounds import BoundBranch, BoundCheck, derivative_test_demo, exp_int_bound, exp_int_bounds
from .audit_grid import builtin_audit_grid, load_audit_grid, run_osc_audit

__all__ = [
    'OscIntegralCase', 'eval_osc', 'integrate_oscillatory', 'osc_closed_form',
    'BoundBranch', 'BoundCheck', 'derivative_test_demo', 'exp_int_bound', 'exp_int_bounds',
    'builtin_audit_grid', 'load_audit_grid', 'run_osc_audit',
]
