"""Parity of phi_8(n) and phi_12(n) read off the shape of n's factorization.

The rules are the published classification tables, encoded row by row.
They deliberately do not reuse the closed forms in
:mod:`genphi.closed_form`, so sweeping them against an oracle checks the
tables themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

from genphi.arith import Factorization

ODD = "Odd"
EVEN = "Even"


@dataclass(frozen=True)
class ParityVerdict:
    parity: str
    rule: str
    n: int

    @property
    def is_odd(self) -> bool:
        return self.parity == ODD


def _odd_part(f: Factorization, *skip: int) -> list[tuple[int, int]]:
    return [(p, a) for p, a in f if p not in skip]


# Odd rows for e = 8.  Each entry: (shape, condition description, predicate).
# For single-prime shapes the predicate takes (p, alpha); for two-prime
# shapes it takes the two residues mod 8.


def _p8_single(p: int, a: int) -> str | None:
    r = p % 16
    if r in (9, 15):
        return "p≡9,15 (mod 16)"
    if r in (3, 5) and a % 2 == 0:
        return "p≡3,5 (mod 16), 2|α"
    if r in (11, 13) and a % 2 == 1:
        return "p≡11,13 (mod 16), α odd"
    return None


def _p8_double_single(p: int, a: int) -> str | None:
    r = p % 16
    if r in (7, 9):
        return "p≡7,9 (mod 16)"
    if r in (3, 13) and a % 2 == 0:
        return "p≡3,13 (mod 16), 2|α"
    if r in (5, 11) and a % 2 == 1:
        return "p≡5,11 (mod 16), α odd"
    return None


def _p8_pair(p1: int, p2: int) -> str | None:
    r = sorted((p1 % 8, p2 % 8))
    if r == [3, 3]:
        return "p1≡p2≡3 (mod 8)"
    if r == [5, 5]:
        return "p1≡p2≡5 (mod 8)"
    if r == [3, 5]:
        return "p1≡3, p2≡5 (mod 8)"
    return None


def parity_phi8(f: Factorization) -> ParityVerdict:
    n = f.n
    alpha = f.valuation(2)
    odd = _odd_part(f, 2)

    def verdict(cond, shape):
        if cond is None:
            return ParityVerdict(EVEN, f"T5.1 no row ({shape})", n)
        return ParityVerdict(ODD, f"T5.1 row {shape}, {cond}", n)

    if n in (8, 16):
        return ParityVerdict(ODD, "T5.1: n=8,16", n)
    if len(odd) == 1:
        (p, a), = odd
        if alpha == 0:
            return verdict(_p8_single(p, a), "p^α")
        if alpha == 1:
            return verdict(_p8_double_single(p, a), "2p^α")
        if alpha == 2:
            return verdict("p≡3,5 (mod 8)" if p % 8 in (3, 5) else None, "4p^α")
        if alpha == 3:
            return verdict("p≡3,7 (mod 8)" if p % 8 in (3, 7) else None, "8p^α")
    if len(odd) == 2 and alpha <= 1:
        shape = "p1^α1 p2^α2" if alpha == 0 else "2p1^α1 p2^α2"
        return verdict(_p8_pair(odd[0][0], odd[1][0]), shape)
    return ParityVerdict(EVEN, "T5.1 no row", n)


# Odd rows for e = 12: (multiplier 2^a 3^b, modulus, allowed residues)
_T52_ROWS = {
    (0, 0): ("p^α", 24, (13, 17, 19, 23)),
    (1, 0): ("2p^α", 24, (7, 11, 13, 17)),
    (0, 1): ("3p^α", 12, (5, 7)),
    (2, 0): ("4p^α", 12, (5, 7)),
    (1, 1): ("6p^α", 12, (5, 7)),
    (2, 1): ("12p^α", 12, (5, 11)),
}


def parity_phi12(f: Factorization) -> ParityVerdict:
    n = f.n
    if n < 12:
        return ParityVerdict(EVEN, "T5.2: n<12", n)
    if n in (12, 24):
        return ParityVerdict(ODD, "T5.2: n=12,24", n)
    a, b = f.valuation(2), f.valuation(3)
    rest = _odd_part(f, 2, 3)
    if not rest:
        if b == 0 and a >= 4:
            return ParityVerdict(ODD, "T5.2: 2^α, α≥4", n)
        if b == 1 and a >= 2:
            return ParityVerdict(ODD, "T5.2: 3·2^α, α≥2", n)
        if a == 1 and b >= 2:
            return ParityVerdict(ODD, "T5.2: 2·3^β, β≥2", n)
        if a == 2 and b >= 2:
            return ParityVerdict(ODD, "T5.2: 4·3^β, β≥2", n)
        return ParityVerdict(EVEN, "T5.2 no family (2^α 3^β)", n)
    if len(rest) == 1 and (a, b) in _T52_ROWS:
        shape, mod, allowed = _T52_ROWS[(a, b)]
        p = rest[0][0]
        if p % mod in allowed:
            res = ",".join(map(str, allowed))
            return ParityVerdict(ODD, f"T5.2 row {shape}, p≡{res} (mod {mod})", n)
        return ParityVerdict(EVEN, f"T5.2 no row ({shape})", n)
    return ParityVerdict(EVEN, "T5.2 no row", n)
