"""Tests for the closed-form exponents and the best-method table"""

import math

import numpy as np
import pytest
import sympy

from exponents.exponent_calculus import (
    LAMBDA1,
    LAMBDA2_RATIO,
    PowerPair,
    Theta_exact,
    admissible_H,
    b_factor,
    b_second_term_dominates,
    best_label,
    compare_exponents,
    exponent_report,
    in_b_determined_interval,
    in_comparison_ab_region,
    in_new_comparison_region,
    lambda1,
    lambda1_exact,
    lambda2,
    table1,
    theta_A,
    theta_A_exact,
    theta_B,
    theta_B_exact,
    theta_C,
    theta_LZ,
    theta_determined_case,
    theta_determined_value,
)
from utils.errors import DomainError

TABLE1_ROWS = {
    2: "A A A A A A A A A A",
    3: "A A LZ LZ LZ LZ LZ LZ LZ LZ",
    4: "A A LZ LZ LZ LZ LZ LZ LZ LZ",
    5: "B A A LZ LZ LZ LZ LZ LZ LZ",
    6: "B A A LZ LZ LZ LZ LZ LZ LZ",
    7: "B A A LZ LZ LZ LZ LZ LZ LZ",
    8: "B A A A LZ LZ LZ LZ LZ LZ",
    9: "B A A A LZ LZ LZ LZ LZ LZ",
    10: "B B A A LZ LZ LZ LZ LZ LZ",
    11: "B B B A A LZ LZ LZ LZ LZ",
    12: "B B B A A LZ LZ LZ LZ LZ",
    13: "B B B B A A LZ LZ LZ LZ",
    14: "B B B B A A LZ LZ LZ LZ",
    15: "B B B B B A A LZ LZ LZ",
    16: "B B B B B A A LZ LZ LZ",
    17: "B B B B B A A LZ LZ LZ",
    18: "B B B B B B A A LZ LZ",
    19: "B B B B B B A A LZ LZ",
    20: "B B B B B B B A A LZ",
}

GRID = [(k, ell) for ell in range(2, 21) for k in range(1, 11)]
SQRT15 = math.sqrt(15)


def expected_label(k, ell):
    return TABLE1_ROWS[ell].split()[k - 1]


def test_theta_for_linear_square_case():
    report = exponent_report(PowerPair(1, 2))
    assert report.Theta == pytest.approx((32 - 4 * SQRT15) / 49, abs=1e-12)
    assert report.to_dict()["Theta"].startswith("0.336899")


def test_theta_exact_surd_for_linear_square_case():
    expected = (32 - 4 * sympy.sqrt(15)) / 49
    assert sympy.simplify(Theta_exact(PowerPair(1, 2)) - expected) == 0
    assert sympy.simplify(1 - theta_A_exact(PowerPair(1, 2)) - expected) == 0


@pytest.mark.parametrize("ell, expected", [
    (2, (17 + 4 * SQRT15) / 49),
    (3, (44 + 24 * math.sqrt(2)) / 147),
    (4, 5 / 11),
])
def test_theta_A_closed_forms_for_k1(ell, expected):
    assert theta_A(PowerPair(1, ell)) == pytest.approx(expected, abs=1e-12)


def test_theta_C_matches_theta_A_for_k_at_least_2():
    for k, ell in GRID:
        if k >= 2:
            assert theta_C(PowerPair(k, ell)) == theta_A(PowerPair(k, ell))


def test_theta_C_for_k1_uses_two_over_l():
    assert theta_C(PowerPair(1, 4)) == pytest.approx(5 / 11, abs=1e-15)
    assert theta_C(PowerPair(1, 20)) == pytest.approx(2 / 20, abs=1e-15)


def test_lambda_values_at_branch_points():
    assert lambda1(2) == pytest.approx(1.0)
    assert lambda1(3) == pytest.approx(0.75)
    assert lambda1_exact(3) == sympy.Rational(3, 4)
    assert lambda2(1, 4) == pytest.approx(5 / 11)


def test_lambda_functions_are_continuous():
    assert LAMBDA1.is_continuous()
    assert LAMBDA2_RATIO.is_continuous()


def test_lambda1_decreases_and_lambda2_increases():
    ells = np.linspace(2.0, 40.0, 2001)
    values = [lambda1(ell) for ell in ells]
    assert all(b <= a + 1e-15 for a, b in zip(values, values[1:]))
    assert min(values) > 5 / 12

    for ell in range(2, 21):
        row = [lambda2(k, ell) for k in np.linspace(1.0, 10.0, 500)]
        assert all(b >= a - 1e-15 for a, b in zip(row, row[1:]))


def test_domain_errors():
    with pytest.raises(DomainError):
        lambda1(1.5)
    with pytest.raises(DomainError):
        lambda2(0.5, 3)
    with pytest.raises(DomainError):
        theta_A(PowerPair(2, 1))
    with pytest.raises(DomainError):
        PowerPair(0, 2)
    with pytest.raises(DomainError):
        PowerPair(1.5, 2)


def test_table1_reproduces_every_cell():
    df = table1()
    assert df.shape == (19, 10)
    assert list(df.columns) == [f"k{k}" for k in range(1, 11)]
    for k, ell in GRID:
        assert df.loc[ell, f"k{k}"] == expected_label(k, ell), (k, ell)


def test_exact_ties_resolve_by_comparison_regions():
    pair = PowerPair(2, 10)
    assert compare_exponents(theta_A(pair), theta_B(pair),
                             lambda: theta_A_exact(pair), lambda: theta_B_exact(pair)) == 0
    assert best_label(pair) == "B"
    assert best_label(PowerPair(5, 15)) == "B"
    assert best_label(PowerPair(5, 10)) == "LZ"


def test_compare_exponents_outside_margin_skips_exact_forms():
    def fail():
        raise AssertionError("exact form should not be needed")
    assert compare_exponents(0.5, 0.4, fail, fail) == 1
    assert compare_exponents(0.4, 0.5, fail, fail) == -1


def test_comparison_ab_region_characterizes_theta_B_below_theta_A():
    for k, ell in GRID:
        pair = PowerPair(k, ell)
        below = compare_exponents(theta_B(pair), theta_A(pair),
                                  lambda: theta_B_exact(pair), lambda: theta_A_exact(pair)) < 0
        assert in_comparison_ab_region(k, ell) == below, (k, ell)


def test_b_determined_interval_is_where_power_term_wins():
    for k, ell in GRID:
        assert in_b_determined_interval(k, ell) == b_second_term_dominates(k, ell), (k, ell)
    assert in_b_determined_interval(5, 15)
    assert not in_b_determined_interval(1, 20)


def test_new_comparison_region_is_where_lz_loses():
    for k, ell in GRID:
        assert in_new_comparison_region(k, ell) == (expected_label(k, ell) != "LZ"), (k, ell)


def test_theta_determined_cases():
    assert theta_determined_case(1, 2) == "lambda2_over_k"
    assert theta_determined_case(2, 9) == "lambda2_over_k"
    assert theta_determined_case(1, 5) == "theta_B"
    assert theta_determined_case(3, 5) == "min_lambda1_power"
    for k, ell in GRID:
        pair = PowerPair(k, ell)
        theta = max(theta_A(pair), theta_B(pair))
        assert theta_determined_value(k, ell) == pytest.approx(theta, abs=1e-12), (k, ell)


def test_theta_LZ_closed_form():
    assert theta_LZ(PowerPair(1, 2)) == pytest.approx(0.5)
    assert theta_LZ(PowerPair(3, 2)) == pytest.approx(5 / 18)


def test_admissible_range():
    pair = PowerPair(1, 2)
    rng = admissible_H(pair, 10 ** 6, 0.05)
    assert rng.lower_exponent == pytest.approx((32 - 4 * SQRT15) / 49 + 0.05)
    assert rng.upper == pytest.approx(10 ** (6 * 0.95))
    assert not rng.empty
    assert admissible_H(pair, 10 ** 6, 0.4).empty


def test_admissible_range_rejects_bad_arguments():
    with pytest.raises(DomainError):
        admissible_H(PowerPair(1, 2), 10 ** 6, 0.0)
    with pytest.raises(DomainError):
        admissible_H(PowerPair(1, 2), 3, 0.05)


def test_b_factor():
    X = 1e6
    log_x = math.log(X)
    assert b_factor(X) == pytest.approx(math.exp((log_x / math.log(log_x)) ** (1 / 3)))
    assert b_factor(X, c=2.0) > b_factor(X)
    with pytest.raises(DomainError):
        b_factor(2.0)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_lambdas_strictly_decrease_in_l(k):
    ells = np.arange(2.0, 22.0, 0.05)
    first = [lambda1(ell) for ell in ells]
    second = [lambda2(k, ell) for ell in ells]
    assert all(b < a for a, b in zip(first, first[1:]))
    assert all(b < a for a, b in zip(second, second[1:]))


@pytest.mark.parametrize("k", [2, 3, 5])
def test_threshold_for_squares_is_one_minus_one_over_k(k):
    pair = PowerPair(k, 2)
    assert exponent_report(pair).Theta == pytest.approx(1 - 1 / k, abs=1e-12)
    rng = admissible_H(pair, 10 ** 8, 0.01)
    assert rng.lower_exponent == pytest.approx(1 - 1 / k + 0.01, abs=1e-12)
    assert not rng.empty
