"""
Main Term
The Beta-function constant C(k,l), the predicted main term and the smooth
sum S(Q) it is derived from
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from arith.prime_sieve import iroot
from exponents.exponent_calculus import PowerPair
from utils.errors import DomainError

logger = logging.getLogger(__name__)


def main_term_constant(pair):
    """
    C(k,l) = Gamma(1/k) Gamma(1/l) / (k l Gamma(1/k + 1/l)), via log-Gamma

    Args:
        pair (PowerPair): Exponent pair

    Returns:
        float: Positive constant; 1 whenever k = 1
    """
    a, b = 1.0 / pair.k, 1.0 / pair.ell
    return math.exp(gammaln(a) + gammaln(b) - gammaln(a + b)) / (pair.k * pair.ell)


@dataclass(frozen=True)
class MainTermModel:
    """C(k,l) H X^(1/k + 1/l - 1) for one pair"""

    pair: object
    C: float
    exponent: float

    def predict(self, X, H):
        return self.C * H * X ** self.exponent


@lru_cache(maxsize=None)
def main_term_model(pair):
    return MainTermModel(pair=pair, C=main_term_constant(pair), exponent=pair.exponent)


def _check_anchor():
    # C(1,2) = Gamma(1) Gamma(1/2) / (2 Gamma(3/2)) = 1
    value = main_term_constant(PowerPair(1, 2))
    if abs(value - 1.0) > 1e-12:
        raise RuntimeError(f"main-term constant anchor failed: C(1,2) = {value!r}")


_check_anchor()


def main_term(pair, X, H):
    """
    Predicted value C(k,l) H X^(1/k + 1/l - 1) of the window sum

    Args:
        pair (PowerPair): Exponent pair
        X (int): Start of the window
        H (int): Window length, 4 <= H <= X

    Returns:
        float: Main term
    """
    if not 4 <= H <= X:
        raise DomainError(f"need 4 <= H <= X, got X={X}, H={H}")
    return main_term_model(pair).predict(X, H)


def main_term_integrated(pair, X, H):
    """C(k,l)/(1/k + 1/l) ((X+H)^(1/k+1/l) - X^(1/k+1/l)), the integrated main term"""
    if not 4 <= H <= X:
        raise DomainError(f"need 4 <= H <= X, got X={X}, H={H}")
    s = 1.0 / pair.k + 1.0 / pair.ell
    return main_term_constant(pair) / s * X ** s * math.expm1(s * math.log1p(H / X))


def S_direct(pair, Q, X):
    """
    S(Q) = sum over n^l <= X of (Q - n^l)^(1/k)

    Args:
        pair (PowerPair): Exponent pair
        Q (float): Evaluation point, Q >= X
        X (float): Truncation of the n-sum

    Returns:
        float: Compensated sum of the terms
    """
    if Q < X:
        raise DomainError(f"S needs Q >= X, got Q={Q}, X={X}")
    n_max = iroot(int(math.floor(X)), pair.ell)
    if n_max == 0:
        return 0.0
    n = np.arange(1, n_max + 1, dtype=np.float64)
    terms = (Q - n ** pair.ell) ** (1.0 / pair.k)
    return math.fsum(terms)


@dataclass(frozen=True)
class MainTermCheck:
    """S(X+H) - S(X) against the main term and its error shape"""

    s_diff: float
    main: float
    error: float
    error_shape: float
    fitted_constant: float

    def to_dict(self):
        return dict(self.__dict__)


def main_term_check(pair, X, H):
    """
    Compare S(X+H) - S(X) with the main term

    The error is measured against H^(1+1/k) X^(1/l-1) + H^(1/k).

    Args:
        pair (PowerPair): Exponent pair
        X (int): Start of the window
        H (int): Window length, 4 <= H <= X

    Returns:
        MainTermCheck: Difference, main term, error and fitted constant
    """
    main = main_term(pair, X, H)
    s_diff = S_direct(pair, X + H, X) - S_direct(pair, X, X)
    error = abs(s_diff - main)
    shape = H ** (1.0 + 1.0 / pair.k) * X ** (1.0 / pair.ell - 1.0) + H ** (1.0 / pair.k)
    logger.debug("main term check %s X=%s H=%s error=%.6g shape=%.6g", pair, X, H, error, shape)
    return MainTermCheck(s_diff=s_diff, main=main, error=error, error_shape=shape,
                         fitted_constant=error / shape)
