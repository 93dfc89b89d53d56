from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genphi.arith import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    iter_factorizations,
    jacobi,
    mobius,
)


def trial_factor(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return sorted(out.items())


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def jacobi_by_factoring(a, m):
    """Product of Euler-criterion Legendre symbols over m's prime factors."""
    return prod(legendre(a, p) ** k for p, k in trial_factor(m))


odd_moduli = st.integers(min_value=0, max_value=5000).map(lambda k: 2 * k + 1)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factorize(10403).factors == ((101, 1), (103, 1))


def test_factorize_matches_trial_division():
    for n in range(1, 5000):
        assert list(factorize(n).factors) == trial_factor(n)


@pytest.mark.parametrize(
    "n",
    [
        2**61 - 1,
        (2**31 - 1) * (2**31 + 11),
        1_000_000_007 * 998_244_353,
        3**39,
        2**62,
        4_294_967_291**2,
        2**63 - 25,
        600_851_475_143,
    ],
)
def test_factorize_large(n):
    f = factorize(n)
    assert f.n == n
    assert all(is_prime(p) for p in f.primes)
    assert list(f.primes) == sorted(set(f.primes))


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=2**63 - 1))
def test_factorize_round_trip(n):
    f = factorize(n)
    assert f.n == n
    assert all(is_prime(p) and a >= 1 for p, a in f)
    assert f.big_omega == sum(a for _, a in f)
    assert f.omega == len(f.primes)


def test_is_prime_agrees_with_sieve():
    limit = 20000
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    assert [is_prime(n) for n in range(limit + 1)] == sieve


def test_iter_factorizations_matches_factorize():
    assert list(iter_factorizations(1, 3000)) == [factorize(n) for n in range(1, 3001)]
    assert list(iter_factorizations(10**12, 10**12 + 3)) == [
        factorize(n) for n in range(10**12, 10**12 + 4)
    ]


def test_factorization_rejects_noncanonical():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        Factorization(((2, 0),))
    with pytest.raises(ValueError):
        factorize(0)


def test_euler_phi():
    assert euler_phi(factorize(1)) == 1
    assert euler_phi(factorize(12)) == 4
    assert euler_phi(factorize(9972)) == sum(1 for i in range(1, 9973) if gcd(i, 9972) == 1)


def test_euler_phi_counts_coprime_residues():
    for n in range(1, 1500):
        assert euler_phi(factorize(n)) == sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)


def test_mobius():
    assert mobius(factorize(1)) == 1
    assert mobius(factorize(4)) == 0
    assert mobius(factorize(30)) == -1


def test_mobius_sums_to_zero_over_divisors():
    # sum_{d|n} mu(d) = [n == 1]
    for n in range(1, 2000):
        assert sum(mobius(factorize(d)) for d in divisors(factorize(n))) == (n == 1)


@given(st.integers(1, 3000), st.integers(1, 3000))
def test_phi_mu_multiplicative(m, n):
    if gcd(m, n) != 1:
        return
    fm, fn, fmn = factorize(m), factorize(n), factorize(m * n)
    assert euler_phi(fmn) == euler_phi(fm) * euler_phi(fn)
    assert mobius(fmn) == mobius(fm) * mobius(fn)


def test_divisors():
    assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
    assert divisors(factorize(1)) == [1]


@pytest.mark.parametrize(
    "a, m, expected",
    [(-1, 5, 1), (-2, 7, -1), (-3, 11, -1), (3, 9, 0), (5, 1, 1), (0, 1, 1), (0, 3, 0)],
)
def test_jacobi_examples(a, m, expected):
    assert jacobi(a, m) == expected


@pytest.mark.parametrize("m", [0, -3, 4, 10])
def test_jacobi_rejects_bad_modulus(m):
    with pytest.raises(ValueError):
        jacobi(1, m)


@given(st.integers(-10**6, 10**6), odd_moduli)
def test_jacobi_matches_legendre_product(a, m):
    assert jacobi(a, m) == jacobi_by_factoring(a, m)


@given(st.integers(-10**6, 10**6), odd_moduli)
def test_jacobi_zero_iff_common_factor(a, m):
    assert (jacobi(a, m) == 0) == (gcd(a, m) != 1)


@given(st.integers(-10**4, 10**4), odd_moduli, odd_moduli)
def test_jacobi_multiplicative_in_modulus(a, m1, m2):
    if gcd(m1, m2) != 1:
        return
    assert jacobi(a, m1 * m2) == jacobi(a, m1) * jacobi(a, m2)


@given(st.integers(-10**6, 10**6), odd_moduli, st.integers(-50, 50))
def test_jacobi_periodic_in_numerator(a, m, k):
    assert jacobi(a, m) == jacobi(a + k * m, m)


@given(odd_moduli)
def test_jacobi_supplement_tables(m):
    assert (jacobi(-1, m) == 1) == (m % 4 == 1)
    assert (jacobi(-2, m) == 1) == (m % 8 in (1, 3))
    if gcd(m, 6) == 1:
        assert (jacobi(-3, m) == 1) == (m % 12 in (1, 7))
