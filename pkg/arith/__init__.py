"""Integer-side computations: sieve, representation sums, main term, singular series"""

from .prime_sieve import (
    PsiShortIntervalCheck,
    SieveSegment,
    iter_prime_segments,
    primes_in,
    psi,
    psi_many,
    psi_short_interval_check,
)
from .main_term import MainTermModel, S_direct, main_term, main_term_check, main_term_constant
from .representation import (
    ExperimentRecord,
    Weight,
    R,
    lattice_count,
    power_count,
    run_sieve_experiment,
    window_sum,
)
from .singular_series import hardy_littlewood_prediction, singular_series, singular_series_many

__all__ = [
    'PsiShortIntervalCheck', 'SieveSegment', 'iter_prime_segments', 'primes_in',
    'psi', 'psi_many', 'psi_short_interval_check',
    'MainTermModel', 'S_direct', 'main_term', 'main_term_check', 'main_term_constant',
    'ExperimentRecord', 'Weight', 'R', 'lattice_count', 'power_count',
    'run_sieve_experiment', 'window_sum',
    'hardy_littlewood_prediction', 'singular_series', 'singular_series_many',
]
