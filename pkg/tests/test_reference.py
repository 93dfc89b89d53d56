from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genphi.arith import euler_phi, factorize
from genphi.reference import (
    DEFINITION,
    MOBIUS_SUM,
    count_coprime_upto,
    phi_def,
    phi_mobius,
)


def gcd_count(n, e):
    return sum(1 for i in range(1, n // e + 1) if gcd(i, n) == 1)


def test_phi_def_examples():
    assert phi_def(15, 8).value == 1
    assert phi_def(11, 12).value == 0
    v = phi_def(15, 8)
    assert v.method == DEFINITION and v.branch is None


def test_phi_mobius_examples():
    assert phi_mobius(12, 12).value == 1
    assert phi_mobius(24, 12).value == 1
    assert phi_mobius(8, 8).value == 1
    assert phi_mobius(8, 8).method == MOBIUS_SUM


def test_mask_count_matches_gcd_loop():
    for n in range(1, 3000):
        f = factorize(n)
        for e in (1, 2, 3, 8):
            assert count_coprime_upto(n // e, n, f.primes) == gcd_count(n, e)


@given(st.integers(1, 10**5), st.integers(1, 20))
def test_mask_count_random(n, e):
    assert phi_def(n, e).value == gcd_count(n, e)


def test_phi_e1_is_euler_phi():
    for n in range(1, 3000):
        assert phi_def(n, 1).value == euler_phi(factorize(n))


def test_phi2_is_half_phi_from_three_on():
    assert phi_def(1, 2).value == 0
    assert phi_def(2, 2).value == 1
    for n in range(3, 3000):
        assert 2 * phi_def(n, 2).value == euler_phi(factorize(n))


def test_definition_equals_mobius_sum():
    for n in range(1, 3001):
        f = factorize(n)
        for e in range(1, 17):
            assert phi_def(f, e).value == phi_mobius(f, e).value, (n, e)


@pytest.mark.slow
def test_definition_equals_mobius_sum_full():
    from genphi.arith import iter_factorizations

    for f in iter_factorizations(3001, 10**4):
        for e in range(1, 17):
            assert phi_def(f, e).value == phi_mobius(f, e).value, (f.n, e)


@given(st.integers(1, 10**6), st.integers(1, 40))
def test_zero_exactly_below_e(n, e):
    v = phi_mobius(n, e).value
    assert (v == 0) == (n < e)
    assert 0 <= v <= euler_phi(factorize(n))


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        phi_def(0, 3)
    with pytest.raises(ValueError):
        phi_mobius(5, 0)
