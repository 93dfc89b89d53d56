"""Exact integer primitives: factorization, phi, mu and the Jacobi symbol.

Everything here works on plain Python ints.  The supported range for
factorization is 1 <= n < 2**63, though nothing breaks far beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

MAX_N = 2**63

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_BOUND = 1000
# iter_factorizations stops sieving above this and factors one by one
_SIEVE_LIMIT = 20_000_000


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition ``n = prod p_i ** a_i``.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
    ascending primes.  The factorization of 1 is the empty tuple.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, a in self.factors:
            if p <= prev or a < 1:
                raise ValueError(f"not a canonical factorization: {self.factors!r}")
            prev = p

    @property
    def n(self) -> int:
        out = 1
        for p, a in self.factors:
            out *= p**a
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(a for _, a in self.factors)

    def valuation(self, p: int) -> int:
        for q, a in self.factors:
            if q == p:
                return a
        return 0

    def without(self, *ps: int) -> Factorization:
        """The factorization of n with the given primes removed."""
        return Factorization(tuple((p, a) for p, a in self.factors if p not in ps))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n (Pollard-Brent rho)."""
    if n % 2 == 0:
        return 2
    # deterministic sequence of (seed, constant) attempts
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Factor n: trial division below 1000, then Miller-Rabin + Pollard-Brent."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    found: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p < _TRIAL_BOUND and p * p <= n:
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        if p * p > n:
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, found)
    return Factorization(tuple(sorted(found.items())))


def smallest_factor_table(limit: int) -> list[int]:
    """Linear sieve: spf[k] is the least prime dividing k (spf[0] = spf[1] = 0)."""
    spf = [0] * (limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
        for p in primes:
            if p > spf[i] or i * p > limit:
                break
            spf[i * p] = p
    return spf


def factorize_with(n: int, spf: list[int]) -> Factorization:
    """Factor n using a table from :func:`smallest_factor_table`."""
    pairs = []
    while n > 1:
        p = spf[n]
        a = 0
        while n % p == 0:
            n //= p
            a += 1
        pairs.append((p, a))
    return Factorization(tuple(pairs))


def iter_factorizations(lo: int, hi: int) -> Iterator[Factorization]:
    """Factorizations of lo..hi inclusive, in order."""
    if hi < lo:
        return
    if hi > _SIEVE_LIMIT or hi - lo < isqrt(hi):
        for n in range(max(lo, 1), hi + 1):
            yield factorize(n)
        return
    spf = smallest_factor_table(hi)
    for n in range(max(lo, 1), hi + 1):
        yield factorize_with(n, spf)


def euler_phi(f: Factorization) -> int:
    out = 1
    for p, a in f:
        out *= p ** (a - 1) * (p - 1)
    return out


def mobius(f: Factorization) -> int:
    if any(a > 1 for _, a in f):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(f: Factorization) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, a in f:
        divs = [d * p**k for d in divs for k in range(a + 1)]
    return sorted(divs)


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 1, by quadratic reciprocity."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive modulus, got {m}")
    a %= m
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                sign = -sign
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            sign = -sign
        a %= m
    return sign if m == 1 else 0
