"""Brute-force cross-checks.

Nothing here calls into the modules it is meant to check: prefixes are
expanded by plain iteration, factors are counted by sliding windows, and
eigenvector tests use cross-multiplication instead of division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


def naive_prefix(images: Sequence[Sequence[int]], letter: int, length: int, power: int = 1) -> Tuple[int, ...]:
    """Iterate ``w -> phi^power(w)`` from ``letter`` until ``length`` letters exist."""
    w = [letter]
    while len(w) < length:
        before = len(w)
        for _ in range(power):
            w = [c for b in w for c in images[b]]
        if len(w) == before:
            raise ValueError("prefix does not grow")
    return tuple(w[:length])


def naive_return_words(prefix: Sequence[int], a: int) -> List[Tuple[int, ...]]:
    """Complete ``a``-to-next-``a`` segments of ``prefix``, in order of first appearance."""
    positions = [i for i, c in enumerate(prefix) if c == a]
    if len(positions) < 2:
        raise ValueError("need at least two occurrences of the letter")
    seen = {}
    for i, j in zip(positions, positions[1:]):
        seen.setdefault(tuple(prefix[i:j]), None)
    return list(seen)


def naive_factors(prefix: Sequence, n: int) -> set:
    return {tuple(prefix[i : i + n]) for i in range(len(prefix) - n + 1)}


def factor_complexity_curve(prefix: Sequence, n_max: int) -> List[int]:
    if n_max >= len(prefix):
        raise ValueError("n_max must be smaller than the prefix length")
    return [len(naive_factors(prefix, n)) for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class KernelCensus:
    """Distinct truncated k-kernel rows ``n -> y(k^e n + r)``, ``n < length``.

    ``counts[e]`` counts rows over all exponents up to ``e``.  Truncation can
    both merge distinct rows and, at small depth, miss later ones, so this is
    a heuristic diagnostic and never a proof.
    """

    k: int
    depth: int
    length: int
    counts: Tuple[int, ...]

    @property
    def stabilized(self) -> bool:
        return len(self.counts) >= 2 and self.counts[-1] == self.counts[-2]

    @property
    def strictly_growing(self) -> bool:
        return all(x < y for x, y in zip(self.counts, self.counts[1:]))


def sequence_kernel_census(y: Sequence, k: int, depth: int, length: int) -> KernelCensus:
    """Census of the truncated ``k``-kernel of the sequence prefix ``y``."""
    if len(y) < k**depth * length:
        raise ValueError(f"need a prefix of length {k ** depth * length}")
    rows = set()
    counts = []
    for e in range(depth + 1):
        ke = k**e
        for r in range(ke):
            rows.add(tuple(y[ke * n + r] for n in range(length)))
        counts.append(len(rows))
    return KernelCensus(k, depth, length, tuple(counts))


def kernel_census(phi, coding, k: int, depth: int, length: int, letter: int = 0, power: int = 1) -> KernelCensus:
    """Census for the coded fixed point of ``phi`` started at ``letter``."""
    y = naive_prefix(phi.images, letter, k**depth * length, power)
    if coding is not None:
        y = tuple(coding.images[c][0] for c in y)
    return sequence_kernel_census(y, k, depth, length)


def _vecmat(v, m):
    d = len(m)
    return [sum(v[i] * m[i][j] for i in range(d)) for j in range(d)]


def is_eigenvector(v: Sequence[int], m) -> Optional[Fraction]:
    """``λ`` if ``v`` is nonzero and ``v·m`` is parallel to it, else None."""
    if not any(v):
        return None
    w = _vecmat(v, m)
    d = len(v)
    for i in range(d):
        for j in range(d):
            if w[i] * v[j] != w[j] * v[i]:
                return None
    i = max(range(d), key=lambda t: abs(v[t]))
    return Fraction(w[i], v[i])


def brute_eigen_scan(v0: Sequence[int], m, n_max: int) -> Optional[Tuple[int, Fraction]]:
    """Smallest ``n <= n_max`` with ``v0·m^n`` an eigenvector, and its eigenvalue."""
    v = list(v0)
    for n in range(n_max + 1):
        lam = is_eigenvector(v, m)
        if lam is not None:
            return n, lam
        v = _vecmat(v, m)
    return None
