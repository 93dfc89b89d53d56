"""Jacobi-symbol closed forms for floor(m/8) and floor(m/12), plus the
Moebius-Jacobi divisor sum that makes them usable inside phi_e.
"""

from __future__ import annotations

from math import gcd

from genphi.arith import Factorization, jacobi


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def floor_div8_closed(m: int) -> int:
    """floor(m/8) for odd m, as (m - 4 + 2(-2/m) + (-1/m)) / 8."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and positive, got {m}")
    return _exact_div(m - 4 + 2 * jacobi(-2, m) + jacobi(-1, m), 8)


def floor_div12_closed(m: int) -> int:
    """floor(m/12) for m coprime to 6, as (m - 6 + 3(-1/m) + 2(-3/m)) / 12."""
    if m < 1 or gcd(m, 6) != 1:
        raise ValueError(f"m must be positive and coprime to 6, got {m}")
    return _exact_div(m - 6 + 3 * jacobi(-1, m) + 2 * jacobi(-3, m), 12)


def mobius_jacobi_sum(a: int, f: Factorization) -> int:
    """sum_{d | n} mu(n/d) (a/d) for odd n coprime to a, in product form.

    Each prime power p^k contributes (a/p)^k - (a/p)^(k-1).
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    out = 1
    for p, k in f:
        if p == 2:
            raise ValueError("n must be odd")
        if a % p == 0:
            raise ValueError(f"prime {p} of n divides a={a}")
        s = jacobi(a, p)
        out *= s**k - s ** (k - 1)
    return out
