"""
Density Exponents
The zero-density exponent c(alpha), the piecewise phi(lambda), the
maximization of lambda c(alpha) + alpha and solvers for the lambda equations
"""

import enum
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import bisect

from exponents.exponent_calculus import lambda1, lambda2
from exponents.piecewise import PiecewiseRealFunction
from utils.errors import DomainError

logger = logging.getLogger(__name__)

BISECT_XTOL = 1e-12
BISECT_MAXITER = 200
RESIDUAL_TOLERANCE = 1e-10

PHI = PiecewiseRealFunction(
    name="phi",
    breakpoints=[(25, 48), (3, 4)],
    branches=[
        lambda x, o: o.num(3, 5) * x + o.num(3, 4),
        lambda x, o: 3 * x + 2 * (1 - o.sqrt(3 * x)),
        lambda x, o: x + o.num(1, 2),
    ],
    domain=(0.0, math.inf),
    branch_names=("linear_low", "sqrt_middle", "linear_high"),
)

C_ALPHA = PiecewiseRealFunction(
    name="c_alpha",
    breakpoints=[(3, 4)],
    branches=[
        lambda a, o: 3 * (1 - a) / (2 - a),
        lambda a, o: 3 * (1 - a) / (3 * a - 1),
    ],
    domain=(0.5, 1.0),
)


class PhiBranch(enum.Enum):
    LINEAR_LOW = "linear_low"
    SQRT_MIDDLE = "sqrt_middle"
    LINEAR_HIGH = "linear_high"


@dataclass(frozen=True)
class PhiEquationSolution:
    """Root of one of the phi equations found by bisection"""

    lambda_star: float
    residual: float
    branch_used: PhiBranch
    iterations: int

    def to_dict(self):
        return {
            "lambda_star": self.lambda_star,
            "residual": self.residual,
            "branch_used": self.branch_used.value,
            "iterations": self.iterations,
        }


class ShiftMargin(NamedTuple):
    """Outcome of the two shifted phi inequalities at one lambda"""

    first_ok: bool
    second_ok: bool
    precondition_ok: bool


def phi(lam):
    """
    Evaluate phi(lambda)

    Args:
        lam (float): lambda >= 0; values above 1 use the last branch

    Returns:
        float: phi(lambda)
    """
    if lam < 0:
        raise DomainError(f"phi needs lambda >= 0, got {lam}")
    return PHI(lam)


def phi_branch(lam):
    """Branch of phi used at lambda"""
    return PhiBranch(PHI.branch_names[PHI.branch_index(lam)])


def phi_derivative(lam):
    """Derivative of phi; at a breakpoint the left derivative"""
    branch = phi_branch(lam)
    if branch is PhiBranch.LINEAR_LOW:
        return 0.6
    if branch is PhiBranch.SQRT_MIDDLE:
        return 3.0 - math.sqrt(3.0 / lam)
    return 1.0


def c_alpha(alpha):
    """
    Zero-density exponent c(alpha) on [1/2, 1]

    Args:
        alpha (float): Real part bound

    Returns:
        float: 3(1-a)/(2-a) up to 3/4, 3(1-a)/(3a-1) beyond
    """
    return C_ALPHA(alpha)


def h_alpha(lam, alpha):
    """h(alpha) = lambda c(alpha) + alpha"""
    return lam * c_alpha(alpha) + alpha


def _check_alpha_range(alpha_lo, alpha_hi):
    if not 0.5 <= alpha_lo <= alpha_hi <= 1.0:
        raise DomainError(f"need 1/2 <= alpha_lo <= alpha_hi <= 1, got [{alpha_lo}, {alpha_hi}]")


def h_max(lam, alpha_lo=0.5, alpha_hi=0.75):
    """
    Maximum of h over [alpha_lo, alpha_hi]

    On [1/2, 3/4] h is concave with critical point 2 - sqrt(3 lambda); on
    [3/4, 1] it is convex, so the maximum sits at an endpoint.

    Args:
        lam (float): lambda >= 0
        alpha_lo (float): Lower end, at least 1/2
        alpha_hi (float): Upper end, at most 1

    Returns:
        float: max h(alpha)
    """
    if lam < 0:
        raise DomainError(f"h_max needs lambda >= 0, got {lam}")
    _check_alpha_range(alpha_lo, alpha_hi)
    candidates = []
    if alpha_lo <= 0.75:
        a, b = alpha_lo, min(alpha_hi, 0.75)
        critical = 2.0 - math.sqrt(3.0 * lam)
        candidates.append(h_alpha(lam, min(max(critical, a), b)))
    if alpha_hi >= 0.75:
        a, b = max(alpha_lo, 0.75), alpha_hi
        candidates.extend([h_alpha(lam, a), h_alpha(lam, b)])
    return max(candidates)


def h_max_grid(lam, alpha_lo=0.5, alpha_hi=0.75, points=10_000):
    """
    Grid maximization of h, used as an independent check of h_max

    Args:
        lam (float): lambda >= 0
        alpha_lo (float): Lower end
        alpha_hi (float): Upper end
        points (int): Number of grid points, endpoints included

    Returns:
        float: Largest sampled h value
    """
    _check_alpha_range(alpha_lo, alpha_hi)
    alphas = np.linspace(alpha_lo, alpha_hi, points)
    c = np.where(alphas <= 0.75, 3 * (1 - alphas) / (2 - alphas), 3 * (1 - alphas) / (3 * alphas - 1))
    return float(np.max(lam * c + alphas))


def _solve(func, hi, label):
    root, info = bisect(func, 0.0, hi, xtol=BISECT_XTOL, maxiter=BISECT_MAXITER,
                        full_output=True)
    solution = PhiEquationSolution(
        lambda_star=root,
        residual=func(root),
        branch_used=phi_branch(root),
        iterations=info.iterations,
    )
    logger.debug("%s: lambda*=%.17g residual=%.3g after %d steps",
                 label, root, solution.residual, info.iterations)
    return solution


def solve_lambda1(ell):
    """
    Solve phi(lambda) - lambda/l = 1 by bisection

    Args:
        ell (float): Real l >= 2

    Returns:
        PhiEquationSolution: Root and residual
    """
    if ell < 2:
        raise DomainError(f"solve_lambda1 needs l >= 2, got {ell}")
    return _solve(lambda x: phi(x) - x / ell - 1.0, 4.0, f"lambda1(l={ell})")


def solve_lambda2(k, ell):
    """
    Solve phi(lambda) + lambda/2 = 1 + k/l by bisection

    The bracket widens with k/l since the root grows like 2k/(3l).

    Args:
        k (float): Real k >= 1
        ell (float): Real l >= 2

    Returns:
        PhiEquationSolution: Root and residual
    """
    if k < 1 or ell < 2:
        raise DomainError(f"solve_lambda2 needs k >= 1 and l >= 2, got ({k}, {ell})")
    ratio = k / ell
    hi = max(4.0, 2.0 * (ratio + 1.0))
    return _solve(lambda x: phi(x) + x / 2.0 - 1.0 - ratio, hi, f"lambda2(k={k}, l={ell})")


def phi_shift_margin(pair, eps, lam):
    """
    Check the shifted inequalities phi(l) - l/ell <= 1 - eps/10 and
    phi(l) + l/2 <= 1 + k/ell - eps/10 at one lambda

    A lambda above min(lambda1, lambda2) - eps is reported through
    precondition_ok rather than raised.

    Args:
        pair (PowerPair): Exponent pair
        eps (float): Margin epsilon > 0
        lam (float): lambda >= 0

    Returns:
        ShiftMargin: (first_ok, second_ok, precondition_ok)
    """
    if eps <= 0:
        raise DomainError(f"epsilon must be positive, got {eps}")
    pair.require_l_at_least_2()
    k, ell = pair.k, pair.ell
    bound = min(lambda1(ell), lambda2(k, ell)) - eps
    value = phi(lam)
    return ShiftMargin(
        first_ok=value - lam / ell <= 1.0 - eps / 10.0,
        second_ok=value + lam / 2.0 <= 1.0 + k / ell - eps / 10.0,
        precondition_ok=0.0 <= lam <= bound + 1e-15,
    )
