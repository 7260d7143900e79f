import math

import pytest
from hypothesis import given, strategies as st

from oracles import consecutive_prime_powers_naive, divisors_by_scan, is_prime_naive, phi_by_gcd
from pocgroups.numtheory import (
    Factorization,
    PowerCase,
    PrimePowerSolution,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    solve_consecutive_prime_powers,
)


@pytest.mark.parametrize("n, expected", [(1, 1), (9, 6), (12, 4)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_gcd_count():
    for n in range(1, 500):
        assert euler_phi(n) == phi_by_gcd(n)


@pytest.mark.parametrize("fn", [euler_phi, divisors, factorize])
def test_rejects_zero(fn):
    with pytest.raises(ValueError):
        fn(0)


@pytest.mark.parametrize(
    "n, expected",
    [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (24, [1, 2, 3, 4, 6, 8, 12, 24])],
)
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_match_scan():
    for n in range(1, 400):
        assert divisors(n) == divisors_by_scan(n)


@pytest.mark.parametrize(
    "n, pairs", [(1, ()), (24, ((2, 3), (3, 1))), (1944, ((2, 3), (3, 5)))]
)
def test_factorize_examples(n, pairs):
    assert factorize(n).pairs == pairs


@given(st.integers(1, 10**9))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert f.value() == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_prime(p) and k >= 1 for p, k in f)


def test_factorization_rejects_bad_pairs():
    with pytest.raises(ValueError):
        Factorization(((4, 1),))
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        Factorization(((2, 0),))


def test_is_prime_agrees_with_trial_division():
    for n in range(-3, 5000):
        assert is_prime(n) == is_prime_naive(n)


@pytest.mark.parametrize(
    "n, expected",
    [(2**61 - 1, True), (2**64 - 59, True), (3215031751, False), (3825123056546413051, False)],
)
def test_is_prime_64bit(n, expected):
    assert is_prime(n) is expected


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_phi_multiplicative(a, b):
    if math.gcd(a, b) == 1:
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


def test_gauss_identity():
    for n in range(1, 10**4 + 1):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_conspp_limit_10():
    got = [(s.as_tuple(), s.case) for s in solve_consecutive_prime_powers(10)]
    assert got == [
        ((3, 1, 2, 1), PowerCase.FERMAT),
        ((2, 2, 3, 1), PowerCase.MERSENNE),
        ((5, 1, 2, 2), PowerCase.FERMAT),
        ((2, 3, 7, 1), PowerCase.MERSENNE),
        ((3, 2, 2, 3), PowerCase.CATALAN),
    ]


def test_conspp_limit_2_empty():
    assert solve_consecutive_prime_powers(2) == []


def test_conspp_limit_100_contains():
    got = {s.as_tuple() for s in solve_consecutive_prime_powers(100)}
    assert (17, 1, 2, 4) in got
    assert (2, 5, 31, 1) in got


@pytest.mark.parametrize("limit", [10, 100, 5000, 70000])
def test_conspp_matches_pairing_oracle(limit):
    got = [s.as_tuple() for s in solve_consecutive_prime_powers(limit)]
    assert got == [t for _, t in consecutive_prime_powers_naive(limit)]


def test_solution_validates_itself():
    with pytest.raises(ValueError):
        PrimePowerSolution(3, 1, 2, 2, PowerCase.FERMAT)
    with pytest.raises(ValueError):
        PrimePowerSolution(3, 1, 2, 1, PowerCase.MERSENNE)
