"""
Explicit Formula
Truncated explicit formula for psi(x), the zero-indexed sums S_rho and the
audit of S_rho(X+H) - S_rho(X) against its two leading terms
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from arith.prime_sieve import iroot, psi_many
from utils.errors import DomainError, ZeroTableError
from utils.range_splitter import RangeSplitter, ordered_map
from zeros.gamma_coefficients import gamma_ratio_coefficient, power_difference

logger = logging.getLogger(__name__)

ZERO_BLOCK = 512
CRITICAL_LINE = 0.5


@dataclass(frozen=True)
class ExplicitPsiResult:
    """psi(x) from the zeros up to height T"""

    x: float
    T: float
    value: float
    zeros_used: int


def _zero_block_sum(x, gammas):
    def block(chunk):
        lo, hi = chunk
        gam = gammas[lo:hi + 1]
        rho = CRITICAL_LINE + 1j * gam
        terms = 2.0 * np.real(np.exp(rho * math.log(x)) / rho)
        return math.fsum(terms)
    return block


def psi_explicit(x, T, table, lower_order=False, threads=1):
    """
    x - sum over 0 < gamma <= T of 2 Re(x^rho / rho), rho = 1/2 + i gamma

    Conjugate zeros are paired analytically, so the value is real. T is
    snapped down to the largest tabulated gamma <= T.

    Args:
        x (float): Argument, x >= 2
        T (float): Truncation height, at most the table height
        table (ZeroTable): Zero ordinates
        lower_order (bool): Add -log(2 pi) - log(1 - x^-2)/2
        threads (int): Worker threads over zero blocks

    Returns:
        ExplicitPsiResult: Value and number of zeros used
    """
    if x < 2:
        raise DomainError(f"psi_explicit needs x >= 2, got {x}")
    snapped, used = table.snap(T)
    blocks = [(lo, min(lo + ZERO_BLOCK, used) - 1) for lo in range(0, used, ZERO_BLOCK)]
    partials = ordered_map(_zero_block_sum(x, table.gammas), blocks, threads=threads)
    parts = [float(x), -math.fsum(partials)]
    if lower_order:
        parts.extend([-math.log(2.0 * math.pi), -0.5 * math.log1p(-1.0 / (x * x))])
    return ExplicitPsiResult(x=float(x), T=snapped, value=math.fsum(parts), zeros_used=used)


@dataclass(frozen=True)
class PsiErrorRecord:
    """Error of the explicit formula at one x against x T^-1 log^2 x"""

    x: float
    T: float
    psi_direct: float
    psi_explicit: float
    error: float
    bound: float
    fitted_constant: float

    def to_dict(self):
        return dict(self.__dict__)


def psi_error_audit(xs, T, table, lower_order=False, threads=1):
    """
    Compare psi_explicit with the sieved psi on a set of points

    Args:
        xs (iterable): Points x >= 2
        T (float): Truncation height
        table (ZeroTable): Zero ordinates

    Returns:
        list: PsiErrorRecord per point, in input order
    """
    xs = [float(x) for x in xs]
    direct = psi_many(xs)
    records = []
    for x, psi_x in zip(xs, direct):
        result = psi_explicit(x, T, table, lower_order=lower_order, threads=threads)
        error = abs(result.value - float(psi_x))
        bound = x / T * math.log(x) ** 2
        records.append(PsiErrorRecord(
            x=x, T=float(T), psi_direct=float(psi_x), psi_explicit=result.value,
            error=error, bound=bound, fitted_constant=error / bound,
        ))
    logger.info("explicit formula audit: %d points, T=%s, max fitted %.4g",
                len(records), T, max(r.fitted_constant for r in records))
    return records


def S_rho(pair, rho, Q, X):
    """
    S_rho(Q) = rho^-1 sum over n^l <= X of (Q - n^l)^(rho/k), principal powers

    Args:
        pair (PowerPair): Exponent pair
        rho (complex): Nonzero exponent
        Q (float): Evaluation point, Q >= X
        X (float): Truncation of the n-sum, X >= 1

    Returns:
        complex: The sum
    """
    rho = complex(rho)
    if rho == 0:
        raise DomainError("rho must be nonzero")
    if not 1 <= X <= Q:
        raise DomainError(f"S_rho needs 1 <= X <= Q, got X={X}, Q={Q}")
    n_max = iroot(int(math.floor(X)), pair.ell)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    base = Q - n ** pair.ell
    positive = base > 0
    if not np.all(positive) and rho.real <= 0:
        raise DomainError("S_rho with Q = n^l needs Re(rho) > 0")
    s = rho / pair.k
    terms = np.zeros(n.size, dtype=np.complex128)
    terms[positive] = np.exp(s * np.log(base[positive]))
    return complex(math.fsum(terms.real), math.fsum(terms.imag)) / rho


def s_rho_leading_terms(pair, rho, X, H):
    """
    Gamma-ratio term minus ((X+H)^(rho/k) - X^(rho/k)) / (2 rho)

    Returns:
        complex: Sum of the two leading terms of S_rho(X+H) - S_rho(X)
    """
    rho = complex(rho)
    s = rho / pair.k
    main = gamma_ratio_coefficient(pair, rho) * power_difference(X, H, s + 1.0 / pair.ell)
    return main - power_difference(X, H, s) / (2.0 * rho)


def s_rho_bound_shape(pair, gamma, X, H, beta=CRITICAL_LINE):
    """H^(b/k) |g|^(b/k - 1/2) L^2 + H X^(1/k+1/l-1) / |g| + L with L = log X"""
    L = math.log(X)
    g = abs(gamma)
    return (H ** (beta / pair.k) * g ** (beta / pair.k - 0.5) * L * L
            + H * X ** pair.exponent / g + L)


@dataclass(frozen=True)
class SRhoRecord:
    """Residual of S_rho(X+H) - S_rho(X) for one zero"""

    gamma: float
    diff_abs: float
    leading_abs: float
    residual: float
    bound: float
    fitted_constant: float


@dataclass
class SRhoAudit:
    """Residuals over the first zeros of a table"""

    k: int
    ell: int
    X: float
    H: float
    records: List[SRhoRecord] = field(default_factory=list)
    excluded: int = 0
    slope: Optional[float] = None

    @property
    def expected_slope(self):
        return CRITICAL_LINE / self.k - 0.5

    @property
    def max_fitted_constant(self):
        return max((r.fitted_constant for r in self.records), default=0.0)

    def to_dict(self):
        return {
            "k": self.k, "l": self.ell, "X": self.X, "H": self.H,
            "zeros_audited": len(self.records), "excluded": self.excluded,
            "max_fitted_constant": self.max_fitted_constant,
            "slope": self.slope, "expected_slope": self.expected_slope,
            "records": [dict(r.__dict__) for r in self.records],
        }


def s_rho_diff_audit(pair, X, H, table, count, threads=1):
    """
    Audit S_rho(X+H) - S_rho(X) minus its leading terms over the first zeros

    Zeros with |gamma| > 2X are excluded. The log-log slope of residual
    against |gamma| is fitted when at least three residuals are positive.

    Args:
        pair (PowerPair): Exponent pair
        X (float): Start of the window
        H (float): Window length, 4 <= H <= X
        table (ZeroTable): Zero ordinates
        count (int): Number of zeros to audit

    Returns:
        SRhoAudit: Per-zero residuals and summary
    """
    if not 4 <= H <= X:
        raise DomainError(f"need 4 <= H <= X, got X={X}, H={H}")
    if count > len(table):
        raise ZeroTableError(f"requested {count} zeros, table has {len(table)}")
    gammas = [float(g) for g in table.gammas[:count]]
    kept = [g for g in gammas if abs(g) <= 2 * X]

    def audit_zero(index_range):
        lo, hi = index_range
        out = []
        for gamma in kept[lo:hi + 1]:
            rho = complex(CRITICAL_LINE, gamma)
            diff = S_rho(pair, rho, X + H, X) - S_rho(pair, rho, X, X)
            leading = s_rho_leading_terms(pair, rho, X, H)
            residual = abs(diff - leading)
            bound = s_rho_bound_shape(pair, gamma, X, H)
            out.append(SRhoRecord(gamma=gamma, diff_abs=abs(diff), leading_abs=abs(leading),
                                  residual=residual, bound=bound,
                                  fitted_constant=residual / bound))
        return out

    chunks = RangeSplitter(0, len(kept) - 1).split_for_workers(max(1, threads))
    records = [r for part in ordered_map(audit_zero, chunks, threads=threads) for r in part]
    audit = SRhoAudit(k=pair.k, ell=pair.ell, X=X, H=H, records=records,
                      excluded=len(gammas) - len(kept))
    positive = [r for r in records if r.residual > 0]
    if len(positive) >= 3:
        log_g = np.log([r.gamma for r in positive])
        log_r = np.log([r.residual for r in positive])
        audit.slope = float(np.polyfit(log_g, log_r, 1)[0])
    logger.info("S_rho audit %s: %d zeros, max fitted %.4g, slope %s",
                pair, len(records), audit.max_fitted_constant, audit.slope)
    return audit
