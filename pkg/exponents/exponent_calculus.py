"""
Exponent Calculus
Closed-form exponents of the short-interval asymptotic for R_{k,l} and the
method comparison behind the table of best exponents
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import pandas as pd
import sympy

from exponents.piecewise import EXACT_OPS, FLOAT_OPS, PiecewiseRealFunction, as_exact
from utils.errors import DomainError
from utils.formatting import format_float

logger = logging.getLogger(__name__)

COMPARISON_MARGIN = 1e-9
LABELS = ("A", "B", "LZ")


@dataclass(frozen=True)
class PowerPair:
    """Exponent pair (k, l) of the equation N = p^k + n^l"""

    k: int
    ell: int

    def __post_init__(self):
        if int(self.k) != self.k or int(self.ell) != self.ell:
            raise DomainError(f"exponents must be integers, got ({self.k}, {self.ell})")
        if self.k < 1 or self.ell < 1:
            raise DomainError(f"exponents must be positive, got ({self.k}, {self.ell})")

    def require_l_at_least_2(self):
        """Reject pairs with l < 2; the asymptotics need a genuine power"""
        if self.ell < 2:
            raise DomainError(f"l must be at least 2, got l={self.ell}")
        return self

    @property
    def exponent(self):
        """Growth exponent 1/k + 1/l - 1 of the averaged representation count"""
        return 1.0 / self.k + 1.0 / self.ell - 1.0

    def __str__(self):
        return f"({self.k},{self.ell})"


LAMBDA1 = PiecewiseRealFunction(
    name="lambda1",
    breakpoints=[(3, 1), (25, 3)],
    branches=[
        lambda l, o: l / (2 * (l - 1)),
        lambda l, o: (3 * l ** 2 + 2 * l * o.sqrt(3 * l) + l) / (3 * l - 1) ** 2,
        lambda l, o: 5 * l / (4 * (3 * l - 5)),
    ],
    domain=(2.0, math.inf),
)

# lambda2 depends on (k, l) only through the ratio r = k/l
LAMBDA2_RATIO = PiecewiseRealFunction(
    name="lambda2",
    breakpoints=[(31, 96), (5, 8)],
    branches=[
        lambda r, o: o.num(10, 11) * (r + o.num(1, 4)),
        lambda r, o: (o.num(10, 49) + 2 * r / 7
                      + o.num(4, 7) * o.sqrt(o.num(6, 7) * (r - o.num(1, 7)))),
        lambda r, o: o.num(2, 3) * (r + o.num(1, 2)),
    ],
    domain=(0.0, math.inf),
)


def lambda1(ell):
    """
    Evaluate lambda_1(l), the root of phi(x) - x/l = 1

    Args:
        ell (float): Real l >= 2

    Returns:
        float: Branch value
    """
    if ell < 2:
        raise DomainError(f"lambda1 needs l >= 2, got {ell}")
    return LAMBDA1(ell)


def lambda1_exact(ell):
    """lambda_1(l) as an exact sympy surd"""
    if ell < 2:
        raise DomainError(f"lambda1 needs l >= 2, got {ell}")
    return LAMBDA1.exact(ell)


def _check_lambda2_args(k, ell):
    if k < 1 or ell < 2:
        raise DomainError(f"lambda2 needs k >= 1 and l >= 2, got ({k}, {ell})")


def lambda2(k, ell):
    """
    Evaluate lambda_2(k, l), the root of phi(x) + x/2 = 1 + k/l

    Args:
        k (float): Real k >= 1
        ell (float): Real l >= 2

    Returns:
        float: Branch value, continuous across k/l = 31/96 and 5/8
    """
    _check_lambda2_args(k, ell)
    return LAMBDA2_RATIO(k / ell)


def lambda2_exact(k, ell):
    """lambda_2(k, l) as an exact sympy surd"""
    _check_lambda2_args(k, ell)
    return LAMBDA2_RATIO.exact(as_exact(k) / as_exact(ell))


def _power_term(k, ell, exact):
    # k/(l(k-1)); absent for k = 1 since min(A, inf) = A
    if k == 1:
        return None
    if exact:
        return sympy.Rational(k, ell * (k - 1))
    return k / (ell * (k - 1))


def _min(terms, exact):
    terms = [t for t in terms if t is not None]
    return sympy.Min(*terms) if exact else min(terms)


def _theta_lz(pair, exact=False):
    pair.require_l_at_least_2()
    o = EXACT_OPS if exact else FLOAT_OPS
    return _min([o.num(5, 6 * pair.k), o.num(1, pair.ell)], exact)


def _theta_a(pair, exact=False):
    pair.require_l_at_least_2()
    k, ell = pair.k, pair.ell
    if exact:
        l1, l2 = lambda1_exact(ell), lambda2_exact(k, ell)
    else:
        l1, l2 = lambda1(ell), lambda2(k, ell)
    return _min([l1 / k, l2 / k, _power_term(k, ell, exact)], exact)


def _theta_b(pair, exact=False):
    pair.require_l_at_least_2()
    o = EXACT_OPS if exact else FLOAT_OPS
    return _min([o.num(5, 12 * pair.k), _power_term(pair.k, pair.ell, exact)], exact)


def _theta_c(pair, exact=False):
    pair.require_l_at_least_2()
    if pair.k >= 2:
        return _theta_a(pair, exact)
    o = EXACT_OPS if exact else FLOAT_OPS
    ell = pair.ell
    if exact:
        l1, l2 = lambda1_exact(ell), lambda2_exact(1, ell)
    else:
        l1, l2 = lambda1(ell), lambda2(1, ell)
    return _min([l1, l2, o.num(2, ell)], exact)


def theta_LZ(pair):
    """Exponent min(5/(6k), 1/l) of the earlier circle-method range"""
    return _theta_lz(pair)


def theta_A(pair):
    """Exponent min(lambda1/k, lambda2/k, k/(l(k-1))) from the zero-sum method"""
    return _theta_a(pair)


def theta_B(pair):
    """Exponent min(5/(12k), k/(l(k-1))) from primes in short intervals"""
    return _theta_b(pair)


def theta_C(pair):
    """Exponent from the zero-sum estimate alone; equals theta_A for k >= 2"""
    return _theta_c(pair)


def theta_LZ_exact(pair):
    return _theta_lz(pair, exact=True)


def theta_A_exact(pair):
    return _theta_a(pair, exact=True)


def theta_B_exact(pair):
    return _theta_b(pair, exact=True)


def theta_C_exact(pair):
    return _theta_c(pair, exact=True)


def compare_exponents(a, b, exact_a, exact_b, margin=COMPARISON_MARGIN):
    """
    Three-way comparison of two exponents

    Floats further apart than the margin decide directly; closer pairs are
    settled with the exact surd forms.

    Args:
        a (float): First exponent
        b (float): Second exponent
        exact_a (callable): Returns the exact form of a
        exact_b (callable): Returns the exact form of b
        margin (float): Escalation margin

    Returns:
        int: -1, 0 or 1 as a <, =, > b
    """
    if abs(a - b) > margin:
        return 1 if a > b else -1
    diff = sympy.simplify(exact_a() - exact_b())
    logger.debug("escalated comparison %.17g vs %.17g, exact diff %s", a, b, diff)
    if diff == 0 or diff.equals(0):
        return 0
    return 1 if diff.evalf(50) > 0 else -1


def best_label(pair):
    """
    Method giving the best exponent for one pair

    A when theta_A strictly exceeds theta_B and theta_LZ; otherwise B when
    theta_B strictly exceeds theta_LZ; otherwise LZ.

    Args:
        pair (PowerPair): Exponent pair

    Returns:
        str: One of "A", "B", "LZ"
    """
    a, b, lz = theta_A(pair), theta_B(pair), theta_LZ(pair)
    exact_a = lambda: theta_A_exact(pair)
    exact_b = lambda: theta_B_exact(pair)
    exact_lz = lambda: theta_LZ_exact(pair)
    if (compare_exponents(a, b, exact_a, exact_b) > 0
            and compare_exponents(a, lz, exact_a, exact_lz) > 0):
        return "A"
    if compare_exponents(b, lz, exact_b, exact_lz) > 0:
        return "B"
    return "LZ"


@dataclass(frozen=True)
class ExponentReport:
    """All exponents for one pair (k, l)"""

    pair: PowerPair
    theta_LZ: float
    theta_A: float
    theta_B: float
    theta_C: float
    theta: float
    Theta: float
    best_label: str
    lambda1: float
    lambda2: float

    def to_dict(self):
        """
        Serialize with every real as a 17-significant-digit decimal string

        Returns:
            dict: JSON-ready report
        """
        reals = ("theta_LZ", "theta_A", "theta_B", "theta_C", "theta", "Theta",
                 "lambda1", "lambda2")
        data = {"k": self.pair.k, "l": self.pair.ell}
        data.update({name: format_float(getattr(self, name)) for name in reals})
        data["best_label"] = self.best_label
        return data


def exponent_report(pair):
    """
    Compute every exponent for one pair

    Args:
        pair (PowerPair): Exponent pair with l >= 2

    Returns:
        ExponentReport: Populated report
    """
    pair.require_l_at_least_2()
    t_a, t_b = theta_A(pair), theta_B(pair)
    theta = max(t_a, t_b)
    return ExponentReport(
        pair=pair,
        theta_LZ=theta_LZ(pair),
        theta_A=t_a,
        theta_B=t_b,
        theta_C=theta_C(pair),
        theta=theta,
        Theta=1.0 - theta,
        best_label=best_label(pair),
        lambda1=lambda1(pair.ell),
        lambda2=lambda2(pair.k, pair.ell),
    )


def Theta_exact(pair):
    """Threshold exponent 1 - max(theta_A, theta_B) as an exact surd"""
    return sympy.nsimplify(1 - sympy.Max(theta_A_exact(pair), theta_B_exact(pair)))


def table1(k_max=10, l_max=20):
    """
    Grid of best-method labels

    Args:
        k_max (int): Largest k (columns k1..k_max)
        l_max (int): Largest l (rows 2..l_max)

    Returns:
        pd.DataFrame: Labels indexed by l with columns k1..k{k_max}
    """
    rows = {}
    for ell in range(2, l_max + 1):
        rows[ell] = {f"k{k}": best_label(PowerPair(k, ell)) for k in range(1, k_max + 1)}
    df = pd.DataFrame.from_dict(rows, orient="index")
    df.index.name = "l"
    return df


@dataclass(frozen=True)
class AdmissibleRange:
    """Interval [X^(Theta+eps), X^(1-eps)] of admissible H"""

    lower: float
    upper: float
    lower_exponent: float
    upper_exponent: float
    empty: bool


def admissible_H(pair, X, eps):
    """
    Range of H for which the asymptotic formula is asserted

    Args:
        pair (PowerPair): Exponent pair
        X (float): Start of the window, X >= 4
        eps (float): Margin epsilon > 0

    Returns:
        AdmissibleRange: Interval, flagged empty when lower > upper
    """
    if eps <= 0:
        raise DomainError(f"epsilon must be positive, got {eps}")
    if X < 4:
        raise DomainError(f"X must be at least 4, got {X}")
    report = exponent_report(pair)
    lo_exp = report.Theta + eps
    hi_exp = 1.0 - eps
    return AdmissibleRange(
        lower=X ** lo_exp,
        upper=X ** hi_exp,
        lower_exponent=lo_exp,
        upper_exponent=hi_exp,
        empty=lo_exp > hi_exp,
    )


def b_factor(X, c=1.0):
    """
    Diagnostic value of exp(c (log X / log log X)^(1/3))

    Args:
        X (float): Scale, X > e
        c (float): User-chosen constant

    Returns:
        float: Sub-polynomial saving factor
    """
    if X <= math.e:
        raise DomainError(f"B-factor needs X > e, got {X}")
    log_x = math.log(X)
    return math.exp(c * (log_x / math.log(log_x)) ** (1.0 / 3.0))


# Comparison regions, evaluated in exact integer or surd arithmetic

def b_second_term_dominates(k, ell):
    """True iff 5/(12k) >= k/(l(k-1)), the second term then being theta_B"""
    if k == 1:
        return False
    return Fraction(5, 12 * k) >= Fraction(k, ell * (k - 1))


def in_b_determined_interval(k, ell):
    """l >= 10 and 5l/24 - s <= k <= 5l/24 + s with s = sqrt(l(25l-240))/24"""
    return ell >= 10 and (24 * k - 5 * ell) ** 2 <= ell * (25 * ell - 240)


def in_comparison_ab_region(k, ell):
    """Region where theta_B < theta_A"""
    if ell <= 9:
        return 5 * ell < 24 * k
    d = 24 * k - 5 * ell
    return d > 0 and d * d > ell * (25 * ell - 240)


def in_new_comparison_region(k, ell):
    """Region where theta_LZ < theta: l = 2 or k < lambda1(l) l"""
    return ell == 2 or bool(sympy.Integer(k) < lambda1_exact(ell) * ell)


LAMBDA2_DETERMINED = {(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9)}


def theta_determined_case(k, ell):
    """
    Closed form that determines theta(k, l)

    Returns:
        str: "lambda2_over_k", "theta_B" or "min_lambda1_power"
    """
    if (k, ell) in LAMBDA2_DETERMINED:
        return "lambda2_over_k"
    if k == 1 and ell >= 5:
        return "theta_B"
    return "min_lambda1_power"


def theta_determined_value(k, ell):
    """theta(k, l) computed from the closed form selected by theta_determined_case"""
    case = theta_determined_case(k, ell)
    if case == "lambda2_over_k":
        return lambda2(k, ell) / k
    if case == "theta_B":
        return theta_B(PowerPair(k, ell))
    return _min([lambda1(ell) / k, _power_term(k, ell, False)], False)
