"""Rational dynamical eigenvalues by the length-divisibility criterion.

``exp(2πi p/q)`` is an eigenvalue of the system of a primitive substitution
iff ``q`` divides ``|phi^n(r)|`` for one ``n`` and every return word ``r``
to a fixed letter.  For a left-proper ``phi`` the letters themselves may
play the role of return words, so the lengths are the orbit of the all-ones
row vector under ``M_phi``; otherwise the return-word lengths are pushed
forward by ``M_tau``.  Either way the question is whether a row-vector orbit
reaches zero modulo ``q``.  Irrational eigenvalues are not covered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import linalg
from .errors import OrbitCapExceeded
from .returns import compute_return_system
from .words import Substitution, find_fixed_point_seed, incidence_matrix, require_primitive

LETTERS = "letters"
RETURN_WORDS = "return words"


def length_system(phi: Substitution) -> Tuple[str, linalg.RowVector, linalg.IntMatrix]:
    """Starting lengths and the matrix that pushes them forward."""
    require_primitive(phi)
    if phi.left_proper:
        return LETTERS, (1,) * len(phi.alphabet), incidence_matrix(phi)
    rs = compute_return_system(phi, find_fixed_point_seed(phi))
    return RETURN_WORDS, rs.lengths, rs.m_tau

DEFAULT_PRIME_BOUND = 50
DEFAULT_EXPONENT_BOUND = 6


@dataclass(frozen=True)
class EigenvalueTest:
    """``witness`` is the least n with q | all |phi^n(b)|.

    A negative answer carries a certificate: either the closed orbit mod q
    (``preperiod``/``period``), or ``failed_divisor``, a divisor of q that
    already fails.
    """

    q: int
    is_eigenvalue: bool
    witness: Optional[int] = None
    preperiod: Optional[int] = None
    period: Optional[int] = None
    failed_divisor: Optional[int] = None
    cap_exceeded: bool = False


def _test(v, m, q, cap) -> EigenvalueTest:
    orbit = linalg.modular_orbit(v, m, q, cap)
    if orbit.hit is not None:
        return EigenvalueTest(q, True, witness=orbit.hit)
    return EigenvalueTest(q, False, preperiod=orbit.preperiod, period=orbit.period)


def rational_eigenvalue(phi: Substitution, q: int, cap: int = linalg.DEFAULT_ORBIT_CAP) -> EigenvalueTest:
    if q < 2:
        raise ValueError("q must be at least 2")
    _, v, m = length_system(phi)
    return _test(v, m, q, cap)


@dataclass
class SpectralReport:
    tested: List[EigenvalueTest] = field(default_factory=list)
    maximal_prime_power: Dict[int, int] = field(default_factory=dict)
    prime_bound: int = DEFAULT_PRIME_BOUND
    exponent_bound: int = DEFAULT_EXPONENT_BOUND
    basis: str = LETTERS

    def passing(self) -> List[int]:
        return [t.q for t in self.tested if t.is_eigenvalue]

    def failing(self) -> List[int]:
        return [t.q for t in self.tested if not t.is_eigenvalue and not t.cap_exceeded]


def primes_up_to(n: int) -> List[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"[: min(2, n + 1)]
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(n + 1) if sieve[p]]


def spectral_scan(
    phi: Substitution,
    prime_bound: int = DEFAULT_PRIME_BOUND,
    exponent_bound: int = DEFAULT_EXPONENT_BOUND,
    cap: int = linalg.DEFAULT_ORBIT_CAP,
) -> SpectralReport:
    """Test ``q = p^m`` for primes ``p <= prime_bound`` and ``m <= exponent_bound``.

    Once ``p^m`` fails, higher powers of ``p`` fail too (divisor closure) and
    are recorded with ``failed_divisor`` instead of a fresh orbit.  An orbit
    that overflows ``cap`` is recorded with ``cap_exceeded`` and stops the
    scan for that prime.
    """
    basis, v, mat = length_system(phi)
    report = SpectralReport(prime_bound=prime_bound, exponent_bound=exponent_bound, basis=basis)
    for p in primes_up_to(prime_bound):
        failed = None
        unknown = False
        for m in range(1, exponent_bound + 1):
            q = p**m
            if unknown:
                report.tested.append(EigenvalueTest(q, False, cap_exceeded=True))
                continue
            if failed is not None:
                report.tested.append(EigenvalueTest(q, False, failed_divisor=failed))
                continue
            try:
                t = _test(v, mat, q, cap)
            except OrbitCapExceeded:
                t = EigenvalueTest(q, False, cap_exceeded=True)
                unknown = True
            report.tested.append(t)
            if t.is_eigenvalue:
                report.maximal_prime_power[p] = q
            elif not unknown:
                failed = q
    return report
