"""
Singular Series
Truncated Euler product prod over odd p <= P of (1 - (N/p)/(p-1))
"""

import logging
import math

import numpy as np
from sympy import legendre_symbol

from arith.prime_sieve import primes_in
from utils.errors import DomainError

logger = logging.getLogger(__name__)

SERIES_BLOCK = 1024


def _check_args(N, P):
    if N < 1 or P < 3:
        raise DomainError(f"singular series needs N >= 1 and P >= 3, got N={N}, P={P}")


def _odd_primes(P):
    return primes_in(3, int(P) + 1)


def singular_series(N, P):
    """
    Truncated singular series for a single N

    Primes dividing N contribute the factor 1.

    Args:
        N (int): Target, N >= 1
        P (int): Truncation height, P >= 3

    Returns:
        float: Product over odd primes p <= P
    """
    _check_args(N, P)
    logs = []
    for p in _odd_primes(P):
        p = int(p)
        chi = legendre_symbol(N % p, p)
        if chi:
            logs.append(math.log1p(-chi / (p - 1)))
    return math.exp(math.fsum(logs))


def _legendre_table(p):
    chi = -np.ones(p, dtype=np.int8)
    chi[0] = 0
    squares = (np.arange(1, p, dtype=np.int64) ** 2) % p
    chi[squares] = 1
    return chi


def singular_series_many(Ns, P, block=SERIES_BLOCK):
    """
    Truncated singular series for many N at once

    Each product is summed in log space with math.fsum, so a value is the
    same whichever batch or block it is computed in.

    Args:
        Ns (iterable): Targets, all >= 1
        P (int): Truncation height, P >= 3
        block (int): Targets per log-term matrix

    Returns:
        np.ndarray: One value per target
    """
    Ns = np.asarray(list(Ns), dtype=np.int64)
    if Ns.size == 0:
        return np.array([], dtype=np.float64)
    _check_args(int(Ns.min()), P)
    primes = [int(p) for p in _odd_primes(P)]
    tables = [_legendre_table(p) for p in primes]
    factors = [np.array([math.log1p(1 / (p - 1)), 0.0, math.log1p(-1 / (p - 1))]) for p in primes]
    out = np.empty(Ns.size, dtype=np.float64)
    for lo in range(0, Ns.size, block):
        chunk = Ns[lo:lo + block]
        terms = np.empty((chunk.size, len(primes)), dtype=np.float64)
        for j, (p, chi, logs) in enumerate(zip(primes, tables, factors)):
            terms[:, j] = logs[chi[chunk % p] + 1]
        out[lo:lo + chunk.size] = [math.exp(math.fsum(row)) for row in terms.tolist()]
    logger.debug("singular series for %d targets, P=%d", Ns.size, P)
    return out


def hardy_littlewood_prediction(N, P):
    """Conjectured size S(N) sqrt(N) of R_{1,2}(N) for non-square N"""
    return singular_series(N, P) * math.sqrt(N)
