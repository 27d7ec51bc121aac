"""Compile an automatic substitutive sequence into constant-length form.

Given a factorisation basis ``W`` (the letters, or the return words) whose
length vector ``|phi^n(w)|`` is a left eigenvector of the induced matrix for
the eigenvalue ``k``, every ``phi^n(w)`` is relabelled into distinct symbols
``(w, i)``.  The image of the relabelled ``phi^(n+1)(w)`` then splits into
``|phi^n(w)|`` blocks of length ``k``, which define a length-``k``
substitution; the coding sends ``(w, i)`` back to ``phi^n(w)[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import List, Optional, Tuple

from . import linalg
from .errors import EigenPreconditionError
from .returns import ReturnSystem
from .words import (
    Alphabet,
    Coding,
    Morphism,
    Substitution,
    apply,
    find_fixed_point_seed,
    incidence_matrix,
    power,
)


@dataclass(frozen=True)
class ConstantLengthPresentation:
    """``pi`` applied to the fixed point of ``phi_bar`` from ``seed``.

    Letters of ``phi_bar`` are ``(w_index, offset)`` pairs; after merging
    only the class representatives remain, in their original order.
    """

    k: int
    phi_bar: Substitution
    pi: Coding
    seed: int

    @property
    def letters(self) -> Tuple[Tuple[int, int], ...]:
        return self.phi_bar.alphabet.letters

    def __len__(self):
        return len(self.letters)

    def prefix(self, length: int) -> Tuple[int, ...]:
        """First ``length`` letters of the coded fixed point (as indices of ``pi.target``)."""
        out = [self.seed]
        i = 0
        while len(out) < length:
            img = self.phi_bar.images[out[i]]
            out.extend(img[1:] if i == 0 else img)
            i += 1
        return tuple(self.pi.images[b][0] for b in out[:length])


def build_presentation(
    phi: Substitution,
    basis: Optional[ReturnSystem] = None,
    n: int = 0,
    k: Optional[int] = None,
    seed: Optional[int] = None,
) -> ConstantLengthPresentation:
    """Constant-length presentation over the basis ``W``.

    With ``basis=None`` the basis is the alphabet (``tau = phi``) and
    ``seed`` is a letter with ``phi(seed)`` starting with itself.  With a
    :class:`ReturnSystem` the basis is its return words and ``phi`` is
    ignored in favour of ``basis.base``.
    """
    if basis is None:
        base = phi
        words = [(b,) for b in range(len(phi.alphabet))]
        tau = phi
        if seed is None:
            seed = find_fixed_point_seed(phi, power=1).letter
        elif phi.images[seed][0] != seed:
            raise ValueError("phi(seed) must start with seed")
        seed_word = seed
    else:
        base = basis.base
        words = list(basis.words)
        tau = basis.tau
        seed_word = 0
    m_tau = incidence_matrix(tau)
    v = linalg.vecmat(tuple(len(w) for w in words), linalg.matpow(m_tau, n))
    vm = linalg.vecmat(v, m_tau)
    lam = linalg.left_eigenvector_test(v, m_tau)
    if lam is None:
        raise EigenPreconditionError(f"|phi^{n}(w)| = {v} is not a left eigenvector ({vm})")
    if k is None:
        k = int(lam)
    if lam != k or k < 2:
        raise EigenPreconditionError(f"eigenvalue {lam} does not match k={k} >= 2")

    phi_n = power(base, n)
    expanded = [apply(phi_n, w) for w in words]
    letters: List[Tuple[int, int]] = [(w, i) for w in range(len(words)) for i in range(v[w])]
    alphabet = Alphabet(tuple(letters))
    offset = [0, *accumulate(v)]
    images = []
    for w in range(len(words)):
        relabelled = [offset[j] + i for j in tau.images[w] for i in range(v[j])]
        images.extend(tuple(relabelled[t * k : (t + 1) * k]) for t in range(v[w]))
    phi_bar = Substitution(alphabet, images)
    pi = Morphism(alphabet, base.alphabet, tuple((expanded[w][i],) for w, i in letters))
    return ConstantLengthPresentation(k, phi_bar, pi, offset[seed_word])


def merge_letters(p: ConstantLengthPresentation) -> ConstantLengthPresentation:
    """Identify letters with equal output and equal images modulo merged classes.

    Merging repeats until nothing changes; each class is represented by its
    smallest letter.  This is the least such congruence, so two letters are
    only merged once their images have actually become equal.
    """
    n = len(p)
    rep = list(range(n))

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    changed = True
    while changed:
        changed = False
        classes = {}
        for b in range(n):
            if find(b) != b:
                continue
            key = (p.pi.images[b], tuple(find(c) for c in p.phi_bar.images[b]))
            if key in classes:
                rep[b] = classes[key]
                changed = True
            else:
                classes[key] = b
    keep = [b for b in range(n) if find(b) == b]
    new_index = {b: i for i, b in enumerate(keep)}
    alphabet = Alphabet(tuple(p.letters[b] for b in keep))
    images = [tuple(new_index[find(c)] for c in p.phi_bar.images[b]) for b in keep]
    pi = Morphism(alphabet, p.pi.target, tuple(p.pi.images[b] for b in keep))
    return ConstantLengthPresentation(p.k, Substitution(alphabet, images), pi, new_index[find(p.seed)])


@dataclass(frozen=True)
class DFAO:
    """Reads base-``k`` digits most significant first; state ``i`` outputs ``outputs[i]``."""

    k: int
    transitions: Tuple[Tuple[int, ...], ...]
    start: int
    outputs: Tuple[str, ...]

    def to_text(self) -> str:
        lines = [f"k={self.k} states={len(self.transitions)} start={self.start}"]
        for i, (row, out) in enumerate(zip(self.transitions, self.outputs)):
            lines.append(" ".join([str(i), out, *map(str, row)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "DFAO":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        header = dict(part.split("=") for part in lines[0].split())
        k, nstates, start = int(header["k"]), int(header["states"]), int(header["start"])
        transitions = [None] * nstates
        outputs = [None] * nstates
        for ln in lines[1:]:
            fields = ln.split()
            if len(fields) != k + 2:
                raise ValueError(f"bad DFAO line {ln!r}")
            i = int(fields[0])
            outputs[i] = fields[1]
            transitions[i] = tuple(int(x) for x in fields[2:])
        if any(t is None for t in transitions):
            raise ValueError("missing DFAO state lines")
        return cls(k, tuple(transitions), start, tuple(outputs))


def to_dfao(p: ConstantLengthPresentation, coding: Optional[Coding] = None) -> DFAO:
    """``coding`` (on the original alphabet) is applied after ``pi`` when given."""
    outputs = []
    for (b,) in p.pi.images:
        if coding is not None:
            outputs.append(str(coding.target[coding.images[b][0]]))
        else:
            outputs.append(str(p.pi.target[b]))
    return DFAO(p.k, p.phi_bar.images, p.seed, tuple(outputs))


def digits(n: int, k: int) -> List[int]:
    """Base-``k`` digits of ``n``, most significant first; ``[]`` for 0."""
    out = []
    while n:
        n, r = divmod(n, k)
        out.append(r)
    return out[::-1]


def evaluate(d: DFAO, n: int) -> str:
    if n < 0:
        raise ValueError("index must be nonnegative")
    state = d.start
    for digit in digits(n, d.k):
        state = d.transitions[state][digit]
    return d.outputs[state]
