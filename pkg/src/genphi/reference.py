"""Oracle evaluators for phi_e(n).

``phi_def`` counts straight from the definition; ``phi_mobius`` uses the
divisor sum phi_e(n) = sum_{d|n} mu(n/d) floor(d/e).  Every closed form in
the package is tested against these two.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, prod
from typing import TYPE_CHECKING

import numpy as np

from genphi.arith import Factorization, factorize

if TYPE_CHECKING:
    from genphi.closed_form import BranchId

DEFINITION = "Definition"
MOBIUS_SUM = "MobiusSum"
CLOSED_FORM = "ClosedForm"

# below this many candidates a plain gcd loop beats building a numpy mask
_MASK_THRESHOLD = 64


@dataclass(frozen=True)
class PhiValue:
    value: int
    method: str
    branch: BranchId | None = None

    def __int__(self) -> int:
        return self.value

    @property
    def tag(self) -> str:
        if self.branch is None:
            return self.method
        return f"{self.method}({self.branch})"


def _coerce(n: int | Factorization) -> tuple[int, Factorization]:
    if isinstance(n, Factorization):
        return n.n, n
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n, factorize(n)


def count_coprime_upto(m: int, n: int, primes=None) -> int:
    """Number of i in 1..m with gcd(i, n) == 1, by direct enumeration."""
    if m <= 0:
        return 0
    if m <= _MASK_THRESHOLD or primes is None:
        return sum(1 for i in range(1, m + 1) if gcd(i, n) == 1)
    keep = np.ones(m + 1, dtype=bool)
    keep[0] = False
    for p in primes:
        keep[::p] = False
    return int(np.count_nonzero(keep))


def phi_def(n: int | Factorization, e: int) -> PhiValue:
    """Count of 1 <= i <= floor(n/e) with gcd(i, n) = 1."""
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    n, f = _coerce(n)
    return PhiValue(count_coprime_upto(n // e, n, f.primes), DEFINITION)


def phi_mobius(n: int | Factorization, e: int) -> PhiValue:
    """sum over d | n of mu(n/d) * floor(d/e).

    Only squarefree cofactors s = n/d contribute, so the sum runs over
    subsets of the distinct primes of n.
    """
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    n, f = _coerce(n)
    primes = f.primes
    total = 0
    for k in range(len(primes) + 1):
        sign = -1 if k % 2 else 1
        for subset in combinations(primes, k):
            total += sign * (n // prod(subset) // e)
    return PhiValue(total, MOBIUS_SUM)
