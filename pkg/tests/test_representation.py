"""Tests for R(N), window sums and lattice counts"""

import math

import numpy as np
import pytest
from sympy import factorint, isprime

from arith.main_term import main_term
from arith.prime_sieve import iroot, psi_many
from arith.representation import (
    LEDGER_COLUMNS,
    R,
    Weight,
    lattice_count,
    power_count,
    run_sieve_experiment,
    window_sum,
)
from exponents.exponent_calculus import PowerPair
from utils.errors import DomainError, RangeOverflowError


def brute_force_window(pair, X, H, weight="logp"):
    """Double loop over (m, n) with X < m^k + n^l <= X + H"""
    terms = []
    n = 1
    while n ** pair.ell < X + H:
        m = 1
        while m ** pair.k + n ** pair.ell <= X + H:
            if m ** pair.k + n ** pair.ell > X:
                if weight == "logp" and isprime(m):
                    terms.append(math.log(m))
                elif weight == "lambda":
                    factors = factorint(m)
                    if len(factors) == 1:
                        terms.append(math.log(next(iter(factors))))
            m += 1
        n += 1
    return math.fsum(terms)


def test_R_examples():
    assert R(PowerPair(1, 2), 3) == pytest.approx(math.log(2))
    assert R(PowerPair(1, 2), 2) == 0.0
    assert R(PowerPair(2, 2), 13) == pytest.approx(math.log(2) + math.log(3))
    with pytest.raises(DomainError):
        R(PowerPair(1, 2), 1)


def test_window_sum_equals_sum_of_R():
    pair = PowerPair(1, 2)
    expected = math.fsum(R(pair, N) for N in range(101, 121))
    assert window_sum(pair, 100, 20) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("k, ell", [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2)])
def test_window_sum_matches_brute_force(k, ell):
    pair = PowerPair(k, ell)
    rng = np.random.default_rng(1000 * k + ell)
    for _ in range(4):
        X = int(rng.integers(100, 3_000))
        H = int(rng.integers(4, X // 2))
        assert window_sum(pair, X, H) == pytest.approx(brute_force_window(pair, X, H), rel=1e-9)


def test_window_sum_random_windows_up_to_1e5():
    rng = np.random.default_rng(7)
    pair = PowerPair(1, 2)
    for _ in range(20):
        X = int(rng.integers(1_000, 10 ** 5))
        H = int(rng.integers(4, 200))
        expected = math.fsum(R(pair, N) for N in range(X + 1, X + H + 1))
        assert window_sum(pair, X, H) == pytest.approx(expected, rel=1e-9)


def test_lambda_weight_adds_prime_powers():
    pair = PowerPair(1, 2)
    X, H = 2_000, 300
    plain = window_sum(pair, X, H, weight=Weight.LOG_P)
    weighted = window_sum(pair, X, H, weight="lambda")
    assert weighted >= plain
    assert weighted == pytest.approx(brute_force_window(pair, X, H, weight="lambda"), rel=1e-9)
    assert weighted - plain <= 0.1 * plain


def test_window_sum_is_independent_of_threads():
    pair = PowerPair(1, 2)
    single = window_sum(pair, 50_000, 5_000, threads=1)
    assert window_sum(pair, 50_000, 5_000, threads=4) == single


@pytest.mark.parametrize("k, ell", [(1, 2), (2, 2), (1, 3), (2, 3)])
@pytest.mark.parametrize("X", [2_000, 20_000])
@pytest.mark.parametrize("fraction", [10, 2])
def test_prime_power_excess_stays_under_its_error_shape(k, ell, X, fraction):
    pair = PowerPair(k, ell)
    H = X // fraction
    excess = window_sum(pair, X, H, weight="lambda") - window_sum(pair, X, H)
    shape = (H * X ** (1 / (2 * k) + 1 / ell - 1) + H ** (1 / k) + X ** (1 / ell)) * math.log(X) ** 2
    assert excess >= -1e-9
    assert excess <= shape


def test_lambda_window_is_independent_of_threads():
    pair = PowerPair(2, 3)
    single = window_sum(pair, 40_000, 4_000, weight="lambda", threads=1)
    assert window_sum(pair, 40_000, 4_000, weight="lambda", threads=3) == single


def test_truncated_window_drops_large_n():
    pair = PowerPair(1, 2)
    full = window_sum(pair, 10_000, 1_000)
    truncated = window_sum(pair, 10_000, 1_000, truncate_at_X=True)
    assert truncated <= full


@pytest.mark.parametrize("k, ell, X, H", [
    (1, 2, 10_000, 1_000),
    (1, 3, 20_000, 500),
    (2, 2, 5_000, 700),
    (2, 3, 30_000, 4_000),
])
def test_truncated_lambda_window_is_a_sum_of_psi_differences(k, ell, X, H):
    pair = PowerPair(k, ell)
    ns = range(1, iroot(X, ell) + 1)
    upper = psi_many([iroot(X + H - n ** ell, k) for n in ns])
    lower = psi_many([iroot(X - n ** ell, k) for n in ns])
    expected = math.fsum((upper - lower).tolist())
    truncated = window_sum(pair, X, H, weight="lambda", truncate_at_X=True)
    assert truncated == pytest.approx(expected, rel=1e-10)


def test_two_squares_window_near_quarter_pi():
    ratio = window_sum(PowerPair(2, 2), 10 ** 4, 10 ** 3) / (math.pi / 4 * 10 ** 3)
    assert 0.85 <= ratio <= 1.15


def test_window_preconditions():
    pair = PowerPair(1, 2)
    with pytest.raises(DomainError):
        window_sum(pair, 100, 3)
    with pytest.raises(DomainError):
        window_sum(pair, 100, 101)
    with pytest.raises(RangeOverflowError):
        window_sum(pair, 2 ** 63, 2 ** 62)


def test_lattice_count_examples():
    assert lattice_count(PowerPair(1, 2), 4, 4) == 8
    expected = sum(1 for m in range(1, 11) for n in range(1, 11) if 100 < m * m + n * n <= 110)
    assert lattice_count(PowerPair(2, 2), 100, 10) == expected


def test_lattice_count_ratio_is_bounded():
    for k, ell in [(1, 2), (2, 2), (2, 3), (3, 2)]:
        pair = PowerPair(k, ell)
        for X in (10 ** 3, 10 ** 4, 10 ** 5):
            H = max(4, int(X ** 0.6))
            ratio = lattice_count(pair, X, H) / (H * X ** pair.exponent)
            assert ratio <= 5


def test_power_count():
    assert power_count(2, 99, 22) == 2
    assert power_count(3, 0, 8) == 2
    for X in (10 ** 4, 10 ** 6):
        H = int(X ** 0.7)
        assert power_count(2, X, H) <= 3 * (H * X ** -0.5 + 1)


@pytest.mark.slow
def test_linear_square_experiment_at_ten_million():
    X = 10 ** 7
    H = math.ceil(X ** 0.55)
    record = run_sieve_experiment(PowerPair(1, 2), X, H)
    assert 0.95 <= record.ratio <= 1.05
    assert record.ratio == pytest.approx(record.computed_sum / record.predicted)
    assert list(record.ledger_row()) == LEDGER_COLUMNS


@pytest.mark.slow
def test_two_squares_experiment():
    record = run_sieve_experiment(PowerPair(2, 2), 10 ** 8, 10 ** 6)
    assert 0.93 <= record.ratio <= 1.07
    assert record.predicted == pytest.approx(main_term(PowerPair(2, 2), 10 ** 8, 10 ** 6))
