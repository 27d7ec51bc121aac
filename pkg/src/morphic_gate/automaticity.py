"""The automaticity decision and its left-proper fast paths.

A coded fixed point ``y`` of a primitive substitution is automatic exactly
when the vector of lengths ``|phi^s(w)|`` over the return words ``w`` to
the seed letter is a left eigenvector of the return substitution's
incidence matrix, ``s`` being the size of its largest nilpotent Jordan
block.  The check needs ``y`` to be aperiodic, which is only probed up to a
bound here; verdicts record when they rest on that probe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Optional, Union

from . import linalg
from .errors import ContractViolation, NotLeftProperError
from .linalg import EigenReduction, RowVector
from .returns import ReturnSystem, compute_return_system
from .words import (
    DEFAULT_PERIODICITY_BOUND,
    Coding,
    FixedPointSeed,
    PeriodicityReport,
    Primitivity,
    Substitution,
    find_fixed_point_seed,
    incidence_matrix,
    is_primitive,
    periodicity_probe,
    require_primitive,
)

GENERAL = "General"
LEFT_PROPER = "LeftProper"


@dataclass(frozen=True)
class Automatic:
    k: int
    minimal_root: int
    s: int
    eigenvector: RowVector
    path: str = GENERAL
    seed_power: int = 1
    assumes_nonperiodic: bool = True
    evidence_bound: Optional[int] = None
    kind: ClassVar[str] = "Automatic"


@dataclass(frozen=True)
class NotAutomatic:
    s: int
    v_s: RowVector
    v_s_times_m: RowVector
    path: str = GENERAL
    seed_power: int = 1
    assumes_nonperiodic: bool = True
    evidence_bound: Optional[int] = None
    kind: ClassVar[str] = "NotAutomatic"


@dataclass(frozen=True)
class Periodic:
    certified_at: int
    kind: ClassVar[str] = "Periodic"


@dataclass(frozen=True)
class UnresolvedPeriodicity:
    bound: int
    kind: ClassVar[str] = "UnresolvedPeriodicity"


Verdict = Union[Automatic, NotAutomatic, Periodic, UnresolvedPeriodicity]


@dataclass(frozen=True)
class Analysis:
    """Everything computed on the way to a verdict (the certificate's data)."""

    substitution: Substitution
    coding: Optional[Coding]
    primitivity: Primitivity
    seed: Optional[FixedPointSeed]
    periodicity: Optional[PeriodicityReport]
    return_system: Optional[ReturnSystem]
    matrix: Optional[linalg.IntMatrix]
    reduction: Optional[EigenReduction]
    verdict: Verdict


def _iroot(n: int, j: int) -> int:
    lo, hi = 1, 1 << (n.bit_length() // j + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**j <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def minimal_root(k: int) -> int:
    """Smallest ``m`` with ``m**j == k`` for some ``j >= 1``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    for j in range(k.bit_length(), 1, -1):
        r = _iroot(k, j)
        if r > 1 and r**j == k:
            return r
    return k


def _verdict_from_reduction(red: EigenReduction, path: str, seed_power: int, bound: int) -> Verdict:
    if red.eigen is None:
        return NotAutomatic(red.s, red.v_s, red.v_s_times_m, path, seed_power, True, bound)
    lam = red.eigen
    if lam.denominator != 1 or lam < 2:
        raise ContractViolation(f"positive length vector has eigenvalue {lam}, expected an integer >= 2")
    k = int(lam)
    return Automatic(k, minimal_root(k), red.s, red.v_s, path, seed_power, True, bound)


def _probe(phi, seed, coding, bound, strict, assume_nonperiodic):
    report = periodicity_probe(phi, seed, coding, bound)
    if report.periodic:
        return report, Periodic(report.certified_at)
    if strict and not assume_nonperiodic:
        return report, UnresolvedPeriodicity(bound)
    return report, None


def analyze(
    phi: Substitution,
    coding: Optional[Coding] = None,
    seed_hint: Optional[int] = None,
    periodicity_bound: int = DEFAULT_PERIODICITY_BOUND,
    *,
    strict: bool = False,
    assume_nonperiodic: bool = False,
    power: Optional[int] = None,
    left: Optional[int] = None,
) -> Analysis:
    """Run the general return-word pipeline and keep every intermediate.

    ``strict`` turns an inconclusive periodicity probe into
    :class:`UnresolvedPeriodicity` unless ``assume_nonperiodic`` is set.
    """
    prim = require_primitive(phi)
    if max(phi.lengths) == 1:
        return Analysis(phi, coding, prim, None, None, None, None, None, Periodic(1))
    seed = find_fixed_point_seed(phi, seed_hint, power=power, left=left)
    report, early = _probe(phi, seed, coding, periodicity_bound, strict, assume_nonperiodic)
    if early is not None:
        return Analysis(phi, coding, prim, seed, report, None, None, None, early)
    rs = compute_return_system(phi, seed)
    red = linalg.eigen_index_reduce(rs.lengths, rs.m_tau)
    verdict = _verdict_from_reduction(red, GENERAL, seed.power, periodicity_bound)
    return Analysis(phi, coding, prim, seed, report, rs, rs.m_tau, red, verdict)


def decide(
    phi: Substitution,
    coding: Optional[Coding] = None,
    seed_hint: Optional[int] = None,
    periodicity_bound: int = DEFAULT_PERIODICITY_BOUND,
    **kwargs,
) -> Verdict:
    return analyze(phi, coding, seed_hint, periodicity_bound, **kwargs).verdict


def analyze_left_proper(
    phi: Substitution,
    coding: Optional[Coding] = None,
    periodicity_bound: int = DEFAULT_PERIODICITY_BOUND,
    *,
    strict: bool = False,
    assume_nonperiodic: bool = False,
) -> Analysis:
    """Left-proper variant: the eigen test runs on ``M_phi`` and ``|phi^s(b)|``."""
    if not phi.left_proper:
        raise NotLeftProperError(f"{phi.render()} is not left-proper")
    prim = require_primitive(phi)
    if max(phi.lengths) == 1:
        return Analysis(phi, coding, prim, None, None, None, None, None, Periodic(1))
    seed = FixedPointSeed(phi.images[0][0], 1)
    report, early = _probe(phi, seed, coding, periodicity_bound, strict, assume_nonperiodic)
    m = incidence_matrix(phi)
    if early is not None:
        return Analysis(phi, coding, prim, seed, report, None, m, None, early)
    red = linalg.eigen_index_reduce((1,) * len(phi.alphabet), m)
    verdict = _verdict_from_reduction(red, LEFT_PROPER, 1, periodicity_bound)
    return Analysis(phi, coding, prim, seed, report, None, m, red, verdict)


def decide_left_proper(
    phi: Substitution,
    coding: Optional[Coding] = None,
    periodicity_bound: int = DEFAULT_PERIODICITY_BOUND,
    **kwargs,
) -> Verdict:
    return analyze_left_proper(phi, coding, periodicity_bound, **kwargs).verdict


def nonsingular_shortcut(
    phi: Substitution,
    coding: Optional[Coding] = None,
    periodicity_bound: int = DEFAULT_PERIODICITY_BOUND,
) -> Optional[Verdict]:
    """Left-proper, primitive, nonsingular ``M_phi``: automatic iff constant length.

    Returns None when a hypothesis fails (including a certified periodic
    coded fixed point); the caller then falls back to the general path.
    """
    if not phi.left_proper or max(phi.lengths) == 1 or not is_primitive(phi):
        return None
    m = incidence_matrix(phi)
    if linalg.determinant(m) == 0:
        return None
    seed = FixedPointSeed(phi.images[0][0], 1)
    if periodicity_probe(phi, seed, coding, periodicity_bound).periodic:
        return None
    ones = (1,) * len(phi.alphabet)
    k = phi.constant_length
    if k is not None:
        return Automatic(k, minimal_root(k), 0, ones, LEFT_PROPER, 1, True, periodicity_bound)
    return NotAutomatic(0, ones, phi.lengths, LEFT_PROPER, 1, True, periodicity_bound)
