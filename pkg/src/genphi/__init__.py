"""Generalized Euler function phi_e(n): the number of 1 <= i <= floor(n/e)
coprime to n, computed by counting, by a Moebius divisor sum and by closed
forms, with parity classification for e = 8 and e = 12.
"""

from genphi.arith import Factorization, euler_phi, factorize, jacobi, mobius
from genphi.closed_form import BranchId, phi_generalized, residue_profile
from genphi.parity import ParityVerdict, parity_phi8, parity_phi12
from genphi.reference import PhiValue, phi_def, phi_mobius

__all__ = [
    "BranchId",
    "Factorization",
    "ParityVerdict",
    "PhiValue",
    "euler_phi",
    "factorize",
    "jacobi",
    "mobius",
    "parity_phi8",
    "parity_phi12",
    "phi_def",
    "phi_generalized",
    "phi_mobius",
    "residue_profile",
]
