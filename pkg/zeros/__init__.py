"""Zeta zero tables, the explicit formula for psi and the zero-indexed sums S_rho"""

from .zero_table import ZeroTable, load_zeros, validate_gammas
from .gamma_coefficients import gamma_ratio_coefficient
from .explicit_formula import (
    ExplicitPsiResult,
    SRhoAudit,
    S_rho,
    psi_error_audit,
    psi_explicit,
    s_rho_diff_audit,
    s_rho_leading_terms,
)

__all__ = [
    'ZeroTable', 'load_zeros', 'validate_gammas', 'gamma_ratio_coefficient',
    'ExplicitPsiResult', 'SRhoAudit', 'S_rho', 'psi_error_audit', 'psi_explicit',
    's_rho_diff_audit', 's_rho_leading_terms',
]
