"""
Gamma Coefficients
Complex Gamma-ratio coefficient of the leading term of S_rho(X+H) - S_rho(X)
"""

import cmath
import math

from scipy.special import loggamma

from utils.errors import DomainError

GAMMA_CHECK_TOLERANCE = 1e-12


def log_gamma(z):
    """Principal log-Gamma of a real or complex argument"""
    return complex(loggamma(complex(z)))


def _check_gamma():
    if abs(cmath.exp(log_gamma(1.0)) - 1.0) > GAMMA_CHECK_TOLERANCE:
        raise RuntimeError("log-Gamma self check failed at 1")
    if abs(cmath.exp(log_gamma(0.5)) - math.sqrt(math.pi)) > GAMMA_CHECK_TOLERANCE:
        raise RuntimeError("log-Gamma self check failed at 1/2")


_check_gamma()


def gamma_ratio_coefficient(pair, rho):
    """
    Gamma(rho/k + 1) Gamma(1/l) / (l rho Gamma(rho/k + 1/l + 1))

    Args:
        pair (PowerPair): Exponent pair
        rho (complex): Nonzero complex exponent

    Returns:
        complex: Coefficient; at rho = 1 it is C(k,l)/(1/k + 1/l)
    """
    rho = complex(rho)
    if rho == 0:
        raise DomainError("rho must be nonzero")
    k, ell = pair.k, pair.ell
    log_value = (log_gamma(rho / k + 1.0) + log_gamma(1.0 / ell)
                 - log_gamma(rho / k + 1.0 / ell + 1.0))
    return cmath.exp(log_value) / (ell * rho)


def complex_expm1(z):
    """exp(z) - 1 without cancellation for small |z|"""
    a, b = z.real, z.imag
    half_sin = math.sin(b / 2.0)
    real = math.expm1(a) * math.cos(b) - 2.0 * half_sin * half_sin
    imag = math.exp(a) * math.sin(b)
    return complex(real, imag)


def power_difference(Q, H, s):
    """(Q + H)^s - Q^s for real Q > 0, H >= 0 and complex s"""
    s = complex(s)
    return cmath.exp(s * math.log(Q)) * complex_expm1(s * math.log1p(H / Q))
