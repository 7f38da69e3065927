"""
Representation Function
R_{k,l}(N), its short-interval sums and the matching lattice counts
"""

import enum
import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np
from sympy import integer_nthroot, isprime
from tqdm import tqdm

from arith.main_term import main_term
from arith.prime_sieve import iroot, prime_powers_upto, primes_in
from utils.errors import DomainError, check_int_range
from utils.range_splitter import RangeSplitter, ordered_map

logger = logging.getLogger(__name__)


class Weight(str, enum.Enum):
    """Weight attached to each solution m^k + n^l = N"""

    LOG_P = "logp"
    LAMBDA = "lambda"


def _check_window(X, H):
    if not 4 <= H <= X:
        raise DomainError(f"need 4 <= H <= X, got X={X}, H={H}")
    check_int_range(X + H)


def R(pair, N):
    """
    Sum of log p over the solutions of N = p^k + n^l, n >= 1

    Args:
        pair (PowerPair): Exponent pair
        N (int): Target, N >= 2

    Returns:
        float: Weighted count; 0 if N has no representation
    """
    if N < 2:
        raise DomainError(f"R needs N >= 2, got {N}")
    terms = []
    n = 1
    while n ** pair.ell < N:
        root, exact = integer_nthroot(N - n ** pair.ell, pair.k)
        if exact and isprime(root):
            terms.append(math.log(int(root)))
        n += 1
    return math.fsum(terms)


def _m_bounds(pair, X, H, n):
    """m with X < m^k + n^l <= X + H is exactly a < m <= b"""
    power = n ** pair.ell
    return iroot(max(X - power, 0), pair.k), iroot(X + H - power, pair.k)


def _merge_runs(bounds):
    """Merge the half-open ranges [a + 1, b + 1) into disjoint ascending runs"""
    runs = []
    for a, b in sorted((a + 1, b + 1) for a, b in bounds if b > a):
        if runs and a <= runs[-1][1]:
            runs[-1][1] = max(runs[-1][1], b)
        else:
            runs.append([a, b])
    return runs


def _n_max(pair, X, H, truncate_at_X):
    if truncate_at_X:
        return iroot(X, pair.ell)
    return iroot(X + H - 1, pair.ell)


@dataclass
class _WindowWorker:
    """Computes per-n partial sums for one contiguous block of n"""

    pair: object
    X: int
    H: int
    weight: Weight
    progress: object = field(default=None)

    def __call__(self, chunk):
        n_lo, n_hi = chunk
        bounds = [_m_bounds(self.pair, self.X, self.H, n) for n in range(n_lo, n_hi + 1)]
        runs = _merge_runs(bounds)
        if runs:
            primes = np.concatenate([primes_in(lo, hi) for lo, hi in runs])
        else:
            primes = np.array([], dtype=np.int64)
        logs = np.log(primes.astype(np.float64))

        if self.weight is Weight.LAMBDA:
            top = max(b for _, b in bounds) if bounds else 0
            pp_values, pp_logs = prime_powers_upto(top)
        else:
            pp_values = pp_logs = None

        partials = []
        for a, b in bounds:
            i0, i1 = np.searchsorted(primes, [a + 1, b + 1], side="left")
            terms = logs[i0:i1].tolist()
            if pp_values is not None:
                j0, j1 = np.searchsorted(pp_values, [a + 1, b + 1], side="left")
                terms.extend(pp_logs[j0:j1].tolist())
            partials.append(math.fsum(terms))
            if self.progress is not None:
                self.progress.update(1)
        return partials


def window_sum(pair, X, H, weight=Weight.LOG_P, threads=1, truncate_at_X=False, progress=False):
    """
    Sum of R(N) over X < N <= X + H, computed over n rather than N

    For every n with n^l < X + H the admissible m form one interval
    (iroot(X - n^l), iroot(X + H - n^l)]; the intervals are merged into runs
    and each run is sieved once.

    Args:
        pair (PowerPair): Exponent pair
        X (int): Start of the window
        H (int): Window length, 4 <= H <= X
        weight (Weight or str): log p over primes, or Lambda over prime powers
        threads (int): Worker threads over blocks of n
        truncate_at_X (bool): Restrict to n^l <= X
        progress (bool): Show a progress bar

    Returns:
        float: The window sum; independent of ``threads``
    """
    _check_window(X, H)
    weight = Weight(weight)
    n_max = _n_max(pair, X, H, truncate_at_X)
    chunks = RangeSplitter(1, n_max).split_for_workers(max(1, threads))
    logger.info("window_sum %s X=%d H=%d weight=%s: %d values of n in %d chunks",
                pair, X, H, weight.value, n_max, len(chunks))

    with tqdm(total=n_max, desc=f"window {pair}", disable=not progress) as bar:
        worker = _WindowWorker(pair, X, H, weight, bar if progress else None)
        results = ordered_map(worker, chunks, threads=threads)
    return math.fsum(value for partials in results for value in partials)


def lattice_count(pair, X, H):
    """
    Number of positive integer pairs (m, n) with X < m^k + n^l <= X + H

    Args:
        pair (PowerPair): Exponent pair
        X (int): Start of the window
        H (int): Window length, 4 <= H <= X

    Returns:
        int: Exact count
    """
    _check_window(X, H)
    total = 0
    for n in range(1, _n_max(pair, X, H, False) + 1):
        a, b = _m_bounds(pair, X, H, n)
        total += b - a
    return total


def power_count(ell, X, H):
    """Number of n >= 1 with X < n^l <= X + H"""
    if ell < 1 or X < 0 or H < 0:
        raise DomainError(f"power_count needs l >= 1 and X, H >= 0, got ({ell}, {X}, {H})")
    return iroot(X + H, ell) - iroot(X, ell)


@dataclass(frozen=True)
class ExperimentRecord:
    """One window-sum experiment against the predicted main term"""

    k: int
    ell: int
    X: int
    H: int
    weight: str
    computed_sum: float
    predicted: float
    ratio: float
    wall_time: float

    def ledger_row(self):
        """Row in the experiment ledger layout"""
        return {
            "k": self.k, "l": self.ell, "X": self.X, "H": self.H,
            "sum": self.computed_sum, "predicted": self.predicted,
            "ratio": self.ratio, "seconds": self.wall_time,
        }


LEDGER_COLUMNS = ["k", "l", "X", "H", "sum", "predicted", "ratio", "seconds"]


def run_sieve_experiment(pair, X, H, weight=Weight.LOG_P, threads=1, progress=False):
    """
    Compute one window sum and compare it with C(k,l) H X^(1/k+1/l-1)

    Returns:
        ExperimentRecord: Sum, prediction, ratio and wall time
    """
    weight = Weight(weight)
    started = time.perf_counter()
    computed = window_sum(pair, X, H, weight=weight, threads=threads, progress=progress)
    elapsed = time.perf_counter() - started
    predicted = main_term(pair, X, H)
    record = ExperimentRecord(
        k=pair.k, ell=pair.ell, X=X, H=H, weight=weight.value,
        computed_sum=computed, predicted=predicted,
        ratio=computed / predicted, wall_time=elapsed,
    )
    logger.info("experiment %s X=%d H=%d ratio=%.6f in %.2fs", pair, X, H, record.ratio, elapsed)
    return record
