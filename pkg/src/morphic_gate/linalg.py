"""Exact integer matrix arithmetic.

Matrices are tuples of row tuples of Python ints and row vectors are tuples
of ints, so every value is hashable and arbitrary precision.  Vectors act on
the left: ``vecmat(v, M)`` is ``v · M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import OrbitCapExceeded

IntMatrix = Tuple[Tuple[int, ...], ...]
RowVector = Tuple[int, ...]

DEFAULT_ORBIT_CAP = 10**6


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if not m or any(len(row) != len(m) for row in m):
        raise ValueError("matrix must be square and nonempty")
    return m


def identity(d: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matpow(m: IntMatrix, n: int) -> IntMatrix:
    if n < 0:
        raise ValueError("negative matrix power")
    result = identity(len(m))
    base = m
    while n:
        if n & 1:
            result = matmul(result, base)
        n >>= 1
        if n:
            base = matmul(base, base)
    return result


def vecmat(v: Sequence[int], m: IntMatrix) -> RowVector:
    if len(v) != len(m):
        raise ValueError(f"vector of length {len(v)} against {len(m)}x{len(m)} matrix")
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m)))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m))


def _bareiss(rows: list) -> Tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, sign of row swaps)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            sign = -sign
        p = rows[r][c]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r, sign


def rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by Bareiss elimination (no floating point)."""
    rows = [list(map(int, row)) for row in m]
    if not rows:
        return 0
    return _bareiss(rows)[0]


def determinant(m: IntMatrix) -> int:
    rows = [list(row) for row in m]
    d = len(rows)
    r, sign = _bareiss(rows)
    if r < d:
        return 0
    return sign * rows[d - 1][d - 1]


def nilpotency_index(m: IntMatrix) -> int:
    """Size of the largest Jordan block of ``m`` for the eigenvalue 0.

    This is the first ``s`` with ``rank(m^s) == rank(m^(s+1))``; it is 0 for
    a nonsingular matrix.
    """
    current = identity(len(m))
    r = len(m)
    s = 0
    while True:
        nxt = matmul(current, m)
        r_next = rank(nxt)
        if r_next == r:
            return s
        current, r, s = nxt, r_next, s + 1


def left_eigenvector_test(v: Sequence[int], m: IntMatrix) -> Optional[Fraction]:
    """Return the scalar ``λ`` with ``v·m == λ·v``, or None.

    ``λ`` is read off the first nonzero coordinate and then checked on every
    coordinate with exact arithmetic.
    """
    v = tuple(v)
    if not any(v):
        raise ValueError("the zero vector is not an eigenvector candidate")
    vm = vecmat(v, m)
    i = next(i for i, x in enumerate(v) if x)
    lam = Fraction(vm[i], v[i])
    if all(Fraction(y) == lam * x for x, y in zip(v, vm)):
        return lam
    return None


@dataclass(frozen=True)
class EigenReduction:
    s: int
    v_s: RowVector
    v_s_times_m: RowVector
    eigen: Optional[Fraction]


def eigen_index_reduce(v0: Sequence[int], m: IntMatrix) -> EigenReduction:
    """Push ``v0`` forward by the nilpotency index and test the result.

    If ``v0·m^n`` is an eigenvector with nonzero eigenvalue for some n, then
    ``v0·m^s`` is one too, so the single test at ``s`` decides the question
    for every n.
    """
    if not any(v0):
        raise ValueError("v0 must be nonzero")
    s = nilpotency_index(m)
    v_s = vecmat(v0, matpow(m, s))
    eigen = left_eigenvector_test(v_s, m) if any(v_s) else None
    return EigenReduction(s, v_s, vecmat(v_s, m), eigen)


@dataclass(frozen=True)
class ModularOrbit:
    """The orbit ``v·m^n mod q``.

    ``hit`` is the first n with ``v·m^n ≡ 0 (mod q)``; when there is none,
    ``preperiod``/``period`` describe the cycle that closes the orbit
    without visiting zero.
    """

    q: int
    hit: Optional[int]
    preperiod: Optional[int] = None
    period: Optional[int] = None


def modular_orbit(v: Sequence[int], m: IntMatrix, q: int, cap: int = DEFAULT_ORBIT_CAP) -> ModularOrbit:
    if q < 2:
        raise ValueError("modulus must be at least 2")
    d = len(m)
    mq = tuple(tuple(x % q for x in row) for row in m)
    state = tuple(x % q for x in v)
    seen = {}
    n = 0
    while state not in seen:
        if not any(state):
            return ModularOrbit(q, n)
        if len(seen) >= cap:
            raise OrbitCapExceeded(q, cap)
        seen[state] = n
        state = tuple(sum(state[i] * mq[i][j] for i in range(d)) % q for j in range(d))
        n += 1
    return ModularOrbit(q, None, seen[state], n - seen[state])


def modular_zero_orbit(v: Sequence[int], m: IntMatrix, q: int, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """True iff ``v·m^n ≡ 0 (mod q)`` for some n ≥ 0."""
    return modular_orbit(v, m, q, cap).hit is not None
