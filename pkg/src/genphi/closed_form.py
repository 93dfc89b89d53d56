"""Closed forms for phi_e(n) with e in {3, 4, 6, 8, 12} and for e whose
prime support sits strictly inside n's exponents.

Every result carries a :class:`BranchId` naming the case that produced it.
The e = 8 and e = 12 formulas are piecewise in the 2- and 3-adic valuations
of n and in the set of residues of the remaining primes; the pieces are
kept as data (``PHI8_CELLS`` / ``PHI12_CELLS``) so each one can be evaluated
and checked on its own stratum.

All arithmetic is integral: every formula has the shape
``phi(n)/D + (c/E) * (-1)**(Omega + s) * 2**(omega + t)`` and is evaluated
over a common denominator with an exactness check before dividing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from genphi.arith import Factorization, euler_phi, factorize
from genphi.reference import CLOSED_FORM, MOBIUS_SUM, PhiValue, phi_mobius

EQ6 = "Eq6"
THM31 = "Thm3.1"
THM41 = "Thm4.1"
THM42 = "Thm4.2"
LEM23 = "Lem2.3"
LEM24 = "Lem2.4"
LEM25 = "Lem2.5"
LEM26 = "Lem2.6"
GENERIC = "Generic"

CLOSED_FORM_MODULI = (1, 2, 3, 4, 6, 8, 12)


@dataclass(frozen=True, order=True)
class BranchId:
    theorem: str
    case: str

    def __str__(self) -> str:
        return f"{self.theorem} {self.case}"


@dataclass(frozen=True)
class ResidueProfile:
    modulus: int
    residues: frozenset[int]
    alpha: int
    beta: int = 0

    @property
    def key(self) -> str:
        """Residue-class label used by the e = 8 / e = 12 case splits."""
        r = self.residues
        if self.modulus == 8:
            if r in ({5, 7}, {5}):
                return "R57"
            if r in ({3, 7}, {3}):
                return "R37"
            if r == {7}:
                return "R7"
        else:
            if r in ({7, 11}, {7}):
                return "R711"
            if r in ({5, 11}, {5}):
                return "R511"
            if r == {11}:
                return "R11"
        return "other"


CLASS_LABELS = {
    "R57": "R∈{{5,7},{5}}",
    "R37": "R∈{{3,7},{3}}",
    "R7": "R={7}",
    "R711": "R'∈{{7,11},{7}}",
    "R511": "R'∈{{5,11},{5}}",
    "R11": "R'={11}",
    "other": "otherwise",
}


def residue_profile(f: Factorization, modulus: int) -> ResidueProfile:
    if modulus == 8:
        skip = (2,)
    elif modulus == 12:
        skip = (2, 3)
    else:
        raise ValueError(f"modulus must be 8 or 12, got {modulus}")
    res = frozenset(p % modulus for p in f.primes if p not in skip)
    beta = f.valuation(3) if modulus == 12 else 0
    return ResidueProfile(modulus, res, f.valuation(2), beta)


def _pow2(x: int) -> int:
    if x < 0:
        raise ArithmeticError(f"negative power of two 2^{x} inside a closed form")
    return 1 << x


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"closed form produced non-integer {num}/{den}")
    return q


def correction_formula(f: Factorization, den: int, cell) -> int:
    """phi(n)/den + (c/E) (-1)^(Omega+s) 2^(omega+t) for cell = (c, E, s, t).

    ``cell = None`` means the plain phi(n)/den.
    """
    phi = euler_phi(f)
    if cell is None:
        return _exact_div(phi, den)
    c, E, s, t = cell
    L = lcm(den, E)
    sign = -1 if (f.big_omega + s) % 2 else 1
    return _exact_div(phi * (L // den) + c * (L // E) * sign * _pow2(f.omega + t), L)


# ---- e = 3, 4, 6 ----------------------------------------------------------


def _others_all(f: Factorization, skip: tuple[int, ...], modulus: int, r: int) -> bool:
    return all(p % modulus == r for p in f.primes if p not in skip)


def phi3_closed(f: Factorization) -> PhiValue:
    n = f.n
    if n <= 3:
        raise ValueError(f"phi3_closed needs n > 3, got {n}")
    a = f.valuation(3)
    if a <= 1 and _others_all(f, (3,), 3, 2):
        sign = -1 if f.big_omega % 2 else 1
        v = _exact_div(euler_phi(f) + sign * _pow2(f.omega - a - 1), 3)
        return PhiValue(v, CLOSED_FORM, BranchId(LEM23, f"v3={a}, p≡2 (mod 3)"))
    return PhiValue(_exact_div(euler_phi(f), 3), CLOSED_FORM, BranchId(LEM23, "otherwise"))


def phi4_closed(f: Factorization) -> PhiValue:
    n = f.n
    if n <= 4:
        raise ValueError(f"phi4_closed needs n > 4, got {n}")
    a = f.valuation(2)
    if a <= 1 and _others_all(f, (2,), 4, 3):
        sign = -1 if f.big_omega % 2 else 1
        v = _exact_div(euler_phi(f) + sign * _pow2(f.omega - a), 4)
        return PhiValue(v, CLOSED_FORM, BranchId(LEM24, f"α={a}, p≡3 (mod 4)"))
    return PhiValue(_exact_div(euler_phi(f), 4), CLOSED_FORM, BranchId(LEM24, "otherwise"))


def phi6_closed(f: Factorization) -> PhiValue:
    n = f.n
    if n <= 6:
        raise ValueError(f"phi6_closed needs n > 6, got {n}")
    a, b = f.valuation(2), f.valuation(3)
    phi = euler_phi(f)
    if b <= 1 and _others_all(f, (2, 3), 6, 5):
        sign = -1 if f.big_omega % 2 else 1
        if a == 0:
            v = phi + sign * _pow2(f.omega + 1 - b)
            case = "α=0"
        elif a == 1:
            v = phi + sign * _pow2(f.omega - 1 - b)
            case = "α=1"
        else:
            v = phi - sign * _pow2(f.omega - b)
            case = "α≥2"
        return PhiValue(
            _exact_div(v, 6), CLOSED_FORM, BranchId(LEM25, f"{case}, β={b}, p≡5 (mod 6)")
        )
    return PhiValue(_exact_div(phi, 6), CLOSED_FORM, BranchId(LEM25, "otherwise"))


# ---- support of e inside n ------------------------------------------------


def support_divides(f: Factorization, e: int) -> bool:
    """True when every prime power p^b || e has p | n with b <= v_p(n) - 1."""
    if e < 1:
        return False
    for p, b in factorize(e):
        if b > f.valuation(p) - 1:
            return False
    return True


def phi_support_divides(f: Factorization, e: int) -> PhiValue:
    if not support_divides(f, e):
        raise ValueError(f"e={e} is not supported strictly inside n={f.n}")
    return PhiValue(_exact_div(euler_phi(f), e), CLOSED_FORM, BranchId(LEM26, "φ(n)/e"))


# ---- e = 8 ------------------------------------------------------------------

# (alpha stratum, residue class) -> (c, E, s, t); None is plain phi(n)/8.
# alpha stratum 3 stands for alpha >= 3, where every class gives phi(n)/8.
PHI8_CELLS: dict[tuple[int, str], tuple[int, int, int, int] | None] = {
    (0, "R57"): (1, 4, 0, 0),
    (0, "R37"): (1, 8, 0, 0),
    (0, "R7"): (3, 8, 0, 0),
    (0, "other"): None,
    (1, "R57"): (1, 4, 0, -1),
    (1, "R37"): (1, 8, 1, -1),
    (1, "R7"): (1, 8, 0, -1),
    (1, "other"): None,
    (2, "R57"): None,
    (2, "R37"): (1, 8, 1, 0),
    (2, "R7"): (1, 8, 1, 0),
    (2, "other"): None,
    (3, "any"): None,
}


def phi8_cell(f: Factorization) -> tuple[int, str]:
    """Which PHI8_CELLS entry governs n (n > 8 with an odd prime factor)."""
    prof = residue_profile(f, 8)
    if prof.alpha >= 3:
        return (3, "any")
    return (prof.alpha, prof.key)


def phi8_cell_branch(cell: tuple[int, str]) -> BranchId:
    a, cls = cell
    if a == 3:
        return BranchId(THM31, "α≥3")
    return BranchId(THM31, f"α={a}, {CLASS_LABELS[cls]}")


def phi8_power_of_two(alpha: int) -> int:
    if alpha in (1, 2):
        return 0
    if alpha == 3:
        return 1
    return _pow2(alpha - 4)


def phi8_closed(f: Factorization) -> PhiValue:
    n = f.n
    alpha = f.valuation(2)
    if n > 1 and n == 1 << alpha:
        return PhiValue(phi8_power_of_two(alpha), CLOSED_FORM, BranchId(EQ6, f"α={alpha}"))
    if n <= 8:
        v = phi_mobius(f, 8).value
        return PhiValue(v, MOBIUS_SUM, BranchId(GENERIC, "fallback n≤8"))
    cell = phi8_cell(f)
    return PhiValue(correction_formula(f, 8, PHI8_CELLS[cell]), CLOSED_FORM, phi8_cell_branch(cell))


# ---- e = 12 -----------------------------------------------------------------

# (alpha stratum, beta stratum, residue class) -> (c, E, s, t) or None.
# Strata: alpha in {0, 1, 2, 3 (>=3)}, beta in {0, 1, 2 (>=2)}.  For
# alpha >= 2 with beta >= 2 the class does not matter ("any").
PHI12_CELLS: dict[tuple[int, int, str], tuple[int, int, int, int] | None] = {
    (0, 0, "R711"): (1, 4, 0, 0),
    (0, 0, "R511"): (1, 6, 0, 0),
    (0, 0, "R11"): (5, 12, 0, 0),
    (0, 0, "other"): None,
    (0, 1, "R711"): None,
    (0, 1, "R511"): (1, 6, 0, -1),
    (0, 1, "R11"): (1, 6, 0, -1),
    (0, 1, "other"): None,
    (0, 2, "R711"): (1, 4, 1, 0),
    (0, 2, "R511"): None,
    (0, 2, "R11"): (1, 4, 1, 0),
    (0, 2, "other"): None,
    (1, 0, "R711"): (1, 4, 0, -1),
    (1, 0, "R511"): (1, 12, 1, 0),
    (1, 0, "R11"): (1, 12, 0, -1),
    (1, 0, "other"): None,
    (1, 1, "R711"): None,
    (1, 1, "R511"): (1, 12, 1, -1),
    (1, 1, "R11"): (1, 12, 1, -1),
    (1, 1, "other"): None,
    (1, 2, "R711"): (1, 4, 1, -1),
    (1, 2, "R511"): None,
    (1, 2, "R11"): (1, 4, 1, -1),
    (1, 2, "other"): None,
    (2, 0, "R711"): None,
    (2, 0, "R511"): (1, 12, 1, 0),
    (2, 0, "R11"): (1, 12, 1, 0),
    (2, 0, "other"): None,
    (2, 1, "R711"): None,
    (2, 1, "R511"): (1, 12, 1, -1),
    (2, 1, "R11"): (1, 12, 1, -1),
    (2, 1, "other"): None,
    (2, 2, "any"): None,
    (3, 0, "R711"): None,
    (3, 0, "R511"): (1, 6, 0, 0),
    (3, 0, "R11"): (1, 6, 0, 0),
    (3, 0, "other"): None,
    (3, 1, "R711"): None,
    (3, 1, "R511"): (1, 12, 0, 0),
    (3, 1, "R11"): (1, 12, 0, 0),
    (3, 1, "other"): None,
    (3, 2, "any"): None,
}

# cases for n = 2^a 3^b > 12, n != 24
PHI12_SMOOTH_CASES = ("α=0", "α=1", "α=2", "α=3", "α≥4, β=0", "α≥4, β=1", "α≥4, β≥2")


def phi12_cell(f: Factorization) -> tuple[int, int, str]:
    prof = residue_profile(f, 12)
    a = min(prof.alpha, 3)
    b = min(prof.beta, 2)
    if a >= 2 and b == 2:
        return (a, b, "any")
    return (a, b, prof.key)


def phi12_cell_branch(cell: tuple[int, int, str]) -> BranchId:
    a, b, cls = cell
    astr = "α≥3" if a == 3 else f"α={a}"
    bstr = "β≥2" if b == 2 else f"β={b}"
    if cls == "any":
        return BranchId(THM42, f"{astr}, {bstr}")
    return BranchId(THM42, f"{astr}, {bstr}, {CLASS_LABELS[cls]}")


def phi12_smooth(alpha: int, beta: int) -> tuple[int, str]:
    """phi_12(2^alpha 3^beta) for n > 12, n != 24, with the case that fired."""
    n = 2**alpha * 3**beta
    if n <= 12 or n == 24:
        raise ValueError(f"2^{alpha}*3^{beta} = {n} is outside the n > 12, n != 24 range")
    if alpha == 0:
        return _exact_div(3 ** (beta - 2) - (-1) ** beta, 2), "α=0"
    if alpha == 1:
        return _exact_div(3 ** (beta - 2) + (-1) ** beta, 2), "α=1"
    if alpha == 2:
        return 3 ** (beta - 2), "α=2"
    if alpha == 3:
        return 2 * 3 ** (beta - 2), "α=3"
    if beta == 0:
        return _exact_div(_pow2(alpha - 3) + (-1) ** alpha, 3), "α≥4, β=0"
    if beta == 1:
        return _exact_div(_pow2(alpha - 2) - (-1) ** alpha, 3), "α≥4, β=1"
    return _pow2(alpha - 2) * 3 ** (beta - 2), "α≥4, β≥2"


def phi12_closed(f: Factorization) -> PhiValue:
    n = f.n
    if n < 12:
        return PhiValue(0, CLOSED_FORM, BranchId(THM41, "n<12"))
    if n in (12, 24):
        return PhiValue(1, CLOSED_FORM, BranchId(THM41, f"special n={n}"))
    if not f.without(2, 3).factors:
        v, case = phi12_smooth(f.valuation(2), f.valuation(3))
        return PhiValue(v, CLOSED_FORM, BranchId(THM41, case))
    cell = phi12_cell(f)
    return PhiValue(
        correction_formula(f, 12, PHI12_CELLS[cell]), CLOSED_FORM, phi12_cell_branch(cell)
    )


# ---- dispatcher -------------------------------------------------------------


def phi_generalized(n: int | Factorization, e: int) -> PhiValue:
    """phi_e(n) by the most specific closed form available, else the Moebius sum."""
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    f = n if isinstance(n, Factorization) else factorize(n)
    n = f.n
    if e == 1:
        return PhiValue(euler_phi(f), CLOSED_FORM, BranchId(GENERIC, "φ(n)"))
    if e == 2 and n >= 3:
        return PhiValue(euler_phi(f) // 2, CLOSED_FORM, BranchId(GENERIC, "φ(n)/2"))
    if e == 3 and n > 3:
        return phi3_closed(f)
    if e == 4 and n > 4:
        return phi4_closed(f)
    if e == 6 and n > 6:
        return phi6_closed(f)
    if e == 8:
        return phi8_closed(f)
    if e == 12:
        return phi12_closed(f)
    if support_divides(f, e):
        return phi_support_divides(f, e)
    return PhiValue(phi_mobius(f, e).value, MOBIUS_SUM, BranchId(GENERIC, "Möbius fallback"))
