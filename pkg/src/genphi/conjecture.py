"""Floor representations: floor(d/e) as a rational combination of d, 1 and
Jacobi symbols.

Odd d:   floor(d/e) = u (a1 d + a2 + a3 (-1/d) + sum_j b_j (eps_j q_j / d))
Even d:  floor(d/e) = u (a1 d + a2 + sum_j b_j (eps_j d / q_j))

Representations can be evaluated, verified on a range, serialized to JSON,
and searched for over a finite grid of Jacobi terms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from genphi.arith import is_prime, jacobi

ODD_D = "OddD"
EVEN_D = "EvenD"


@dataclass(frozen=True)
class Term:
    b: int
    eps: int
    q: int


@dataclass(frozen=True)
class FloorRepresentation:
    e: int
    parity_class: str
    u: Fraction
    a1: int
    a2: int
    a3: int = 0
    terms: tuple[Term, ...] = field(default=())

    def __post_init__(self):
        if self.parity_class not in (ODD_D, EVEN_D):
            raise ValueError(f"parity_class must be {ODD_D} or {EVEN_D}")
        if self.parity_class == EVEN_D and self.a3:
            raise ValueError("the even-d form has no (-1/d) slot")
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "terms", tuple(sorted(self.terms, key=lambda t: (t.q, t.eps))))
        for t in self.terms:
            if t.eps not in (1, -1) or not is_prime(t.q):
                raise ValueError(f"bad term {t}")
            if self.parity_class == EVEN_D and t.q == 2:
                raise ValueError("even-d terms need an odd prime q (Jacobi modulus)")

    @property
    def r(self) -> int:
        return len(self.terms)

    def accepts(self, d: int) -> bool:
        """True when d is in this representation's domain."""
        want = 1 if self.parity_class == ODD_D else 0
        return d >= 1 and d % 2 == want and gcd(d, self.e) == 1

    def inner(self, d: int) -> int:
        """The integer combination inside the parentheses."""
        if self.parity_class == ODD_D:
            s = self.a1 * d + self.a2 + self.a3 * jacobi(-1, d)
            for t in self.terms:
                s += t.b * jacobi(t.eps * t.q, d)
        else:
            s = self.a1 * d + self.a2
            for t in self.terms:
                s += t.b * jacobi(t.eps * d, t.q)
        return s

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "parity_class": self.parity_class,
            "u": {"num": self.u.numerator, "den": self.u.denominator},
            "a1": self.a1,
            "a2": self.a2,
            "a3": self.a3,
            "terms": [{"b": t.b, "eps": t.eps, "q": t.q} for t in self.terms],
            "r": self.r,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> FloorRepresentation:
        terms = tuple(Term(int(t["b"]), int(t["eps"]), int(t["q"])) for t in doc.get("terms", ()))
        if "r" in doc and doc["r"] != len(terms):
            raise ValueError(f"r={doc['r']} disagrees with {len(terms)} terms")
        return cls(
            e=int(doc["e"]),
            parity_class=doc["parity_class"],
            u=Fraction(int(doc["u"]["num"]), int(doc["u"]["den"])),
            a1=int(doc["a1"]),
            a2=int(doc["a2"]),
            a3=int(doc.get("a3", 0)),
            terms=terms,
        )

    @classmethod
    def from_json(cls, text: str) -> FloorRepresentation:
        return cls.from_dict(json.loads(text))


def eval_representation(rep: FloorRepresentation, d: int) -> Fraction:
    if not rep.accepts(d):
        raise ValueError(f"d={d} is outside the domain of {rep.parity_class} form for e={rep.e}")
    return rep.u * rep.inner(d)


@dataclass
class VerifyReport:
    ok: bool
    checked: int
    counterexample: int | None = None
    got: Fraction | None = None
    expected: int | None = None

    def __str__(self) -> str:
        if self.ok:
            return f"pass ({self.checked} values of d)"
        return f"fail at d={self.counterexample}: got {self.got}, floor is {self.expected}"


def verify_representation(rep: FloorRepresentation, d_max: int, d_min: int = 3) -> VerifyReport:
    """Check rep against floor(d/e) for every admissible d in [d_min, d_max]."""
    num, den = rep.u.numerator, rep.u.denominator
    start = d_min + ((d_min % 2) != (1 if rep.parity_class == ODD_D else 0))
    checked = 0
    for d in range(start, d_max + 1, 2):
        if gcd(d, rep.e) != 1:
            continue
        checked += 1
        s = rep.inner(d)
        if num * s != (d // rep.e) * den:
            return VerifyReport(False, checked, d, rep.u * s, d // rep.e)
    return VerifyReport(True, checked)


# Odd-d representations for the moduli where the shape is known to work.
BUILTIN: dict[int, FloorRepresentation] = {
    2: FloorRepresentation(2, ODD_D, Fraction(1, 2), 1, -1),
    3: FloorRepresentation(3, ODD_D, Fraction(1, 6), 2, -3, 0, (Term(1, -1, 3),)),
    4: FloorRepresentation(4, ODD_D, Fraction(1, 4), 1, -2, 1),
    6: FloorRepresentation(6, ODD_D, Fraction(1, 6), 1, -3, 0, (Term(2, -1, 3),)),
    8: FloorRepresentation(8, ODD_D, Fraction(1, 8), 1, -4, 1, (Term(2, -1, 2),)),
    12: FloorRepresentation(12, ODD_D, Fraction(1, 12), 1, -6, 3, (Term(2, -1, 3),)),
}


def perturbed(rep: FloorRepresentation, **changes) -> FloorRepresentation:
    return replace(rep, **changes)


# ---- bounded search ---------------------------------------------------------

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


def _columns(parity_class: str, keys, d: int) -> list[int]:
    if parity_class == ODD_D:
        row = [d, 1, jacobi(-1, d)]
        row += [jacobi(eps * q, d) for q, eps in keys]
    else:
        row = [d, 1]
        row += [jacobi(eps * d, q) for q, eps in keys]
    return row


def _solve(rows: list[list[int]], rhs: list[int]):
    """One exact rational solution of rows @ x = rhs, or None if inconsistent."""
    from sympy import Matrix, Rational

    A = Matrix(rows)
    b = Matrix(rhs)
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [Fraction(int(Rational(x).p), int(Rational(x).q)) for x in sol]


def _canonical(e: int, parity_class: str, keys, coeffs: list[Fraction]):
    L = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * L) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return None
    if ints[0] < 0:
        g = -g
    ints = [v // g for v in ints]
    u = Fraction(g, L)
    if parity_class == ODD_D:
        a1, a2, a3, bs = ints[0], ints[1], ints[2], ints[3:]
    else:
        a1, a2, a3, bs = ints[0], ints[1], 0, ints[2:]
    if any(b == 0 for b in bs):
        return None  # a smaller term set already covers it
    terms = tuple(Term(b, eps, q) for b, (q, eps) in zip(bs, keys))
    return FloorRepresentation(e, parity_class, u, a1, a2, a3, terms)


def search_representation(
    e: int,
    parity_class: str = ODD_D,
    bound: int = 8,
    primes=DEFAULT_PRIMES,
    max_terms: int = 2,
    d_max: int = 10_000,
) -> FloorRepresentation | None:
    """First representation on the grid that verifies up to d_max.

    The grid is every set of at most ``max_terms`` Jacobi terms
    (eps * q with q from ``primes``), visited by size and then
    lexicographically by (q, eps).  For each term set the coefficients are
    the exact solution of the linear system on the first admissible d; the
    candidate is kept only if its integer coefficients are within
    ``bound`` in absolute value and it verifies on [3, d_max].
    """
    keys_all = [(q, eps) for q in sorted(primes) for eps in (-1, 1)]
    if parity_class == EVEN_D:
        keys_all = [k for k in keys_all if k[0] != 2]
    want = 1 if parity_class == ODD_D else 0
    sample = [d for d in range(3, d_max + 1) if d % 2 == want and gcd(d, e) == 1]
    if not sample:
        return None
    for r in range(max_terms + 1):
        for keys in combinations(keys_all, r):
            width = (3 if parity_class == ODD_D else 2) + r
            n_rows = min(len(sample), max(4 * width, 8 * e))
            rows = [_columns(parity_class, keys, d) for d in sample[:n_rows]]
            rhs = [d // e for d in sample[:n_rows]]
            coeffs = _solve(rows, rhs)
            if coeffs is None:
                continue
            rep = _canonical(e, parity_class, keys, coeffs)
            if rep is None:
                continue
            if max(abs(rep.a1), abs(rep.a2), abs(rep.a3), *(abs(t.b) for t in rep.terms)) > bound:
                continue
            if verify_representation(rep, d_max).ok:
                return rep
    return None
