"""
Piecewise Real Functions
Branch-plus-breakpoint functions evaluated in floating point or exact surds
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence, Tuple

import sympy

from utils.errors import DomainError

CONTINUITY_TOLERANCE = 1e-12


class _FloatOps:
    sqrt = staticmethod(math.sqrt)

    @staticmethod
    def num(p, q=1):
        return p / q


class _ExactOps:
    sqrt = staticmethod(sympy.sqrt)

    @staticmethod
    def num(p, q=1):
        return sympy.Rational(p, q)


FLOAT_OPS = _FloatOps()
EXACT_OPS = _ExactOps()


def as_exact(value):
    """Convert an int, Fraction, float or sympy number to an exact sympy number"""
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, float):
        return sympy.nsimplify(value, rational=True)
    return sympy.Rational(value)


@dataclass(frozen=True)
class PiecewiseRealFunction:
    """
    A real function given by closed-form branches between sorted breakpoints

    Branch ``i`` covers ``[breakpoints[i-1], breakpoints[i]]``; at a breakpoint
    the left branch is used. Each branch is a callable ``(x, ops)`` where
    ``ops`` supplies ``sqrt`` and ``num`` so the same formula evaluates in
    floats or in exact sympy arithmetic.
    """

    name: str
    breakpoints: Sequence[Tuple[int, int]]
    branches: Sequence[Callable]
    domain: Tuple[float, float]
    branch_names: Sequence[str] = field(default=())

    def __post_init__(self):
        if len(self.branches) != len(self.breakpoints) + 1:
            raise ValueError(f"{self.name}: need one more branch than breakpoints")

    def breakpoint_values(self):
        """Breakpoints as floats"""
        return [p / q for p, q in self.breakpoints]

    def check_domain(self, x):
        lo, hi = self.domain
        if not lo <= x <= hi:
            raise DomainError(f"{self.name}: argument {x} outside [{lo}, {hi}]")

    def branch_index(self, x):
        """Index of the branch used at x"""
        for i, (p, q) in enumerate(self.breakpoints):
            if x * q <= p:
                return i
        return len(self.breakpoints)

    def __call__(self, x):
        self.check_domain(float(x))
        return self.branches[self.branch_index(x)](x, FLOAT_OPS)

    def exact(self, x):
        """Evaluate with exact sympy arithmetic"""
        x = as_exact(x)
        self.check_domain(float(x))
        return self.branches[self.branch_index(x)](x, EXACT_OPS)

    def continuity_defects(self):
        """
        Jump of the branch values at each breakpoint

        Returns:
            list: (breakpoint, |left - right|) pairs, computed in floats
        """
        defects = []
        for i, (p, q) in enumerate(self.breakpoints):
            x = p / q
            left = self.branches[i](x, FLOAT_OPS)
            right = self.branches[i + 1](x, FLOAT_OPS)
            defects.append((x, abs(left - right)))
        return defects

    def is_continuous(self, tol=CONTINUITY_TOLERANCE):
        return all(gap <= tol for _, gap in self.continuity_defects())
