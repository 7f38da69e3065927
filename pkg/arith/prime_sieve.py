"""
Prime Sieve
Odd-only segmented sieve of Eratosthenes, prime powers and Chebyshev functions
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import integer_nthroot

from utils.errors import DomainError, check_int_range

logger = logging.getLogger(__name__)

DEFAULT_SEGMENT_SIZE = 1 << 22
SHORT_INTERVAL_EXPONENT = 7 / 12


def iroot(n, k):
    """floor(n^(1/k)) for integers n >= 0; 0 for n <= 0"""
    if n <= 0:
        return 0
    return int(integer_nthroot(int(n), int(k))[0])


@lru_cache(maxsize=8)
def base_primes(limit):
    """
    All primes <= limit from a plain sieve

    Args:
        limit (int): Upper bound, inclusive

    Returns:
        np.ndarray: Primes as int64
    """
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    primes = np.flatnonzero(is_prime).astype(np.int64)
    primes.flags.writeable = False
    return primes


@dataclass(frozen=True)
class SieveSegment:
    """Primes of the half-open range [lo, hi)"""

    lo: int
    hi: int
    primes: np.ndarray

    def __len__(self):
        return len(self.primes)


def sieve_segment(lo, hi, base):
    """
    Sieve one segment [lo, hi) with odd-only storage

    Args:
        lo (int): Lower end, inclusive, at least 2
        hi (int): Upper end, exclusive
        base (np.ndarray): Primes covering sqrt(hi - 1)

    Returns:
        np.ndarray: Primes in the segment, ascending
    """
    head = [2] if lo <= 2 < hi else []
    start = max(lo | 1, 3)
    if start >= hi:
        return np.array(head, dtype=np.int64)

    count = (hi - 1 - start) // 2 + 1
    mask = np.ones(count, dtype=bool)
    for p in base[1:]:
        p = int(p)
        p2 = p * p
        if p2 >= hi:
            break
        first = max(p2, -(-start // p) * p)
        if first % 2 == 0:
            first += p
        if first >= hi:
            continue
        mask[(first - start) // 2::p] = False

    odd = start + 2 * np.flatnonzero(mask).astype(np.int64)
    if head:
        return np.concatenate([np.array(head, dtype=np.int64), odd])
    return odd


def iter_prime_segments(lo, hi, segment_size=DEFAULT_SEGMENT_SIZE):
    """
    Stream the primes of [lo, hi) segment by segment

    Args:
        lo (int): Lower end, inclusive; values below 2 are clamped to 2
        hi (int): Upper end, exclusive, at most 2**63
        segment_size (int): Integers per segment

    Yields:
        SieveSegment: Consecutive segments in ascending order
    """
    check_int_range(hi)
    lo = max(int(lo), 2)
    hi = int(hi)
    if hi <= lo:
        return
    base = base_primes(iroot(hi - 1, 2))
    seg_lo = lo
    while seg_lo < hi:
        seg_hi = min(seg_lo + segment_size, hi)
        yield SieveSegment(seg_lo, seg_hi, sieve_segment(seg_lo, seg_hi, base))
        seg_lo = seg_hi


def primes_in(lo, hi, segment_size=DEFAULT_SEGMENT_SIZE):
    """
    All primes in [lo, hi)

    Args:
        lo (int): Lower end, inclusive
        hi (int): Upper end, exclusive, at most 2**63

    Returns:
        np.ndarray: Ascending primes as int64
    """
    segments = [seg.primes for seg in iter_prime_segments(lo, hi, segment_size)]
    if not segments:
        return np.array([], dtype=np.int64)
    return np.concatenate(segments)


def prime_powers_upto(limit, min_exponent=2):
    """
    Prime powers p^v <= limit with v >= min_exponent

    Args:
        limit (int): Upper bound, inclusive
        min_exponent (int): Smallest exponent v

    Returns:
        tuple: (values, log_p) as ascending int64 and float64 arrays
    """
    values, logs = [], []
    if limit >= 2 ** min_exponent:
        for p in primes_in(2, iroot(limit, min_exponent) + 1):
            p = int(p)
            log_p = math.log(p)
            q = p ** min_exponent
            while q <= limit:
                values.append(q)
                logs.append(log_p)
                q *= p
    order = np.argsort(np.array(values, dtype=np.int64), kind="stable")
    return (np.array(values, dtype=np.int64)[order],
            np.array(logs, dtype=np.float64)[order])


def chebyshev_theta(x):
    """theta(x) = sum of log p over primes p <= x"""
    x = int(math.floor(x))
    if x < 2:
        return 0.0
    return math.fsum(np.log(primes_in(2, x + 1).astype(np.float64)))


def psi(x):
    """
    Chebyshev psi(x) = sum of Lambda(m) over m <= x

    Args:
        x (int): Argument, x >= 0

    Returns:
        float: Sum of log p over all prime powers p^v <= x
    """
    if x < 0:
        raise DomainError(f"psi needs x >= 0, got {x}")
    x = int(math.floor(x))
    parts = []
    v = 1
    while 2 ** v <= x:
        parts.append(chebyshev_theta(iroot(x, v)))
        v += 1
    return math.fsum(parts)


def psi_many(xs):
    """
    psi at many points with a single sieve

    Args:
        xs (iterable): Non-negative arguments

    Returns:
        np.ndarray: psi values in the input order
    """
    xs = np.asarray(list(xs), dtype=np.float64)
    if xs.size == 0:
        return np.array([], dtype=np.float64)
    if np.any(xs < 0):
        raise DomainError("psi needs x >= 0")
    top = int(math.floor(xs.max()))
    primes = primes_in(2, top + 1)
    pp_values, pp_logs = prime_powers_upto(top)
    values = np.concatenate([primes, pp_values])
    logs = np.concatenate([np.log(primes.astype(np.float64)), pp_logs])
    order = np.argsort(values, kind="stable")
    values, logs = values[order], logs[order]

    order_x = np.argsort(xs, kind="stable")
    out = np.empty_like(xs)
    total, done = 0.0, 0
    for idx in order_x:
        upto = int(np.searchsorted(values, math.floor(xs[idx]), side="right"))
        total = math.fsum([total, math.fsum(logs[done:upto])])
        done = upto
        out[idx] = total
    logger.debug("psi_many: %d points up to %d", xs.size, top)
    return out


@dataclass(frozen=True)
class PsiShortIntervalCheck:
    """psi(X + H) - psi(X) against H"""

    X: int
    H: int
    difference: float
    ratio: float
    error: float
    error_shape: float
    fitted_constant: float
    exponent: float
    in_short_range: bool

    def to_dict(self):
        return dict(self.__dict__)


def psi_short_interval_check(X, H):
    """
    Compare psi(X + H) - psi(X) with H

    The difference is summed over the prime powers in (X, X + H] only, so
    nothing below X is sieved. The error is fitted against sqrt(X) log^2 X;
    in_short_range flags H >= X^(7/12), the range of the unconditional
    short-interval prime number theorem.

    Args:
        X (int): Start of the interval, X >= 4
        H (int): Interval length, 4 <= H <= X

    Returns:
        PsiShortIntervalCheck: Difference, ratio and fitted error
    """
    X, H = int(X), int(H)
    if not 4 <= H <= X:
        raise DomainError(f"need 4 <= H <= X, got X={X}, H={H}")
    check_int_range(X + H)
    primes = primes_in(X + 1, X + H + 1)
    pp_values, pp_logs = prime_powers_upto(X + H)
    j0 = int(np.searchsorted(pp_values, X + 1, side="left"))
    terms = np.log(primes.astype(np.float64)).tolist() + pp_logs[j0:].tolist()
    difference = math.fsum(terms)
    error = abs(difference - H)
    L = math.log(X)
    shape = math.sqrt(X) * L * L
    logger.debug("psi difference on (%d, %d]: %d primes, %d higher powers",
                 X, X + H, primes.size, pp_values.size - j0)
    return PsiShortIntervalCheck(
        X=X, H=H, difference=difference, ratio=difference / H, error=error,
        error_shape=shape, fitted_constant=error / shape,
        exponent=math.log(H) / L, in_short_range=H >= X ** SHORT_INTERVAL_EXPONENT,
    )
