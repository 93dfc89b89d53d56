"""Range sweeps: compare closed forms and parity verdicts with the oracles.

Sweeps over 1..N are split into contiguous chunks that can run in worker
processes; chunk results are merged back in n order, so the report does
not depend on scheduling.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from genphi.arith import iter_factorizations
from genphi.closed_form import phi_generalized
from genphi.parity import EVEN, ODD, parity_phi8, parity_phi12
from genphi.reference import phi_def, phi_mobius

ORACLES = ("brute", "mobius", "both")
BRUTE_CAP = 10_000

PARITY_RULES = {8: parity_phi8, 12: parity_phi12}


@dataclass(frozen=True)
class Mismatch:
    n: int
    check: str
    closed: int
    oracle: int
    detail: str

    def __str__(self) -> str:
        return f"n={self.n} {self.check}: closed form {self.closed}, oracle {self.oracle} [{self.detail}]"


@dataclass
class SweepReport:
    e: int
    lo: int
    hi: int
    checked: int = 0
    brute_checked: int = 0
    mobius_checked: int = 0
    parity_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    coverage: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: SweepReport) -> None:
        self.lo = min(self.lo, other.lo)
        self.hi = max(self.hi, other.hi)
        self.checked += other.checked
        self.brute_checked += other.brute_checked
        self.mobius_checked += other.mobius_checked
        self.parity_checked += other.parity_checked
        self.mismatches.extend(other.mismatches)
        self.coverage.update(other.coverage)


def sweep_chunk(e: int, lo: int, hi: int, oracle: str = "both", brute_cap: int = BRUTE_CAP) -> SweepReport:
    if oracle not in ORACLES:
        raise ValueError(f"oracle must be one of {ORACLES}")
    rep = SweepReport(e, lo, hi)
    parity = PARITY_RULES.get(e)
    for f in iter_factorizations(lo, hi):
        n = f.n
        got = phi_generalized(f, e)
        rep.checked += 1
        rep.coverage[str(got.branch)] += 1
        truth = None
        if oracle == "brute" or (oracle == "both" and n <= brute_cap):
            truth = phi_def(f, e).value
            rep.brute_checked += 1
            if got.value != truth:
                rep.mismatches.append(Mismatch(n, "value vs Definition", got.value, truth, str(got.branch)))
        if oracle in ("mobius", "both"):
            mob = phi_mobius(f, e).value
            rep.mobius_checked += 1
            if got.value != mob:
                rep.mismatches.append(Mismatch(n, "value vs MobiusSum", got.value, mob, str(got.branch)))
            if truth is None:
                truth = mob
        if parity is not None:
            v = parity(f)
            rep.parity_checked += 1
            if v.is_odd != (truth % 2 == 1):
                rep.mismatches.append(Mismatch(n, "parity", int(v.is_odd), truth % 2, v.rule))
    return rep


def _chunks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    size = max(1, -(-(hi - lo + 1) // parts))
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def _run(args):
    return sweep_chunk(*args)


def sweep(e: int, n_max: int, oracle: str = "both", brute_cap: int = BRUTE_CAP, jobs: int = 1, lo: int = 1) -> SweepReport:
    """Check phi_generalized (and parity, for e in {8, 12}) on lo..n_max."""
    total = SweepReport(e, lo, n_max)
    if n_max < lo:
        return total
    if jobs <= 1:
        return sweep_chunk(e, lo, n_max, oracle, brute_cap)
    work = [(e, a, b, oracle, brute_cap) for a, b in _chunks(lo, n_max, jobs * 4)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_run, work):
            total.merge(part)
    return total


def table_rows(e: int, lo: int, hi: int):
    """One record per n in lo..hi: n, phi, parity, rule, branch."""
    parity = PARITY_RULES.get(e)
    for f in iter_factorizations(lo, hi):
        v = phi_generalized(f, e)
        if parity is not None:
            verdict = parity(f)
            par, rule = verdict.parity, verdict.rule
        else:
            par, rule = (ODD if v.value % 2 else EVEN), ""
        yield {"n": f.n, "phi": v.value, "parity": par, "rule": rule, "branch": str(v.branch)}
