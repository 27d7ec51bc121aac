"""Return words to the seed letter and the induced return substitution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .errors import ContractViolation, FiniteSystemError, NotStartingWithSeed, UnknownReturnWord
from .words import (
    Alphabet,
    FixedPointSeed,
    Substitution,
    Word,
    apply,
    expand_prefix,
    incidence_matrix,
    power,
    require_primitive,
)


@dataclass(frozen=True)
class ReturnSystem:
    """Return words ``words[i]`` to ``seed_letter`` in the fixed point of ``base``.

    ``base`` is the substitution already raised to the seed power.  ``tau``
    acts on the index alphabet ``0..len(words)-1`` and ``lengths`` holds
    ``|words[i]|``.
    """

    base: Substitution
    seed_letter: int
    words: Tuple[Word, ...]
    tau: Substitution
    m_tau: linalg.IntMatrix
    lengths: linalg.RowVector

    @property
    def index(self) -> Dict[Word, int]:
        return {w: i for i, w in enumerate(self.words)}

    def render_words(self) -> List[str]:
        sep = "" if self.base.alphabet.single_char else " "
        return [self.base.alphabet.render(w, sep) for w in self.words]


def _split_at(letter: int, w: Sequence[int]) -> List[Word]:
    """Cut ``w`` before every occurrence of ``letter``; ``w`` must start with it."""
    if not w or w[0] != letter:
        raise NotStartingWithSeed("word does not start with the seed letter")
    cuts = [i for i, c in enumerate(w) if c == letter] + [len(w)]
    return [tuple(w[i:j]) for i, j in zip(cuts, cuts[1:])]


def first_return_word(phi: Substitution, seed: FixedPointSeed) -> Word:
    """Prefix of the fixed point up to the second occurrence of the seed letter.

    The search window is ``|phi^(e*d)(a)|``: the first return word always
    appears in ``phi^d(a)`` for the ``e``-th power.
    """
    if max(phi.lengths) == 1:
        raise FiniteSystemError("every image has length 1")
    a = seed.letter
    d = len(phi.alphabet)
    ones = [1] * d
    window = linalg.vecmat(ones, linalg.matpow(incidence_matrix(phi), seed.power * d))[a]
    length = 16
    while True:
        length = min(length, window)
        prefix = expand_prefix(phi, seed, length)
        try:
            return prefix[: prefix.index(a, 1)]
        except ValueError:
            if length >= window:
                raise ContractViolation(
                    f"second occurrence of the seed letter missing from a prefix of length {window}"
                ) from None
            length *= 2


def factorize_over_returns(rs: ReturnSystem, w: Sequence[int]) -> Tuple[int, ...]:
    """Indices of the return words whose concatenation is ``w``.

    Each return word holds its only seed letter at position 0, so the
    factorisation is obtained by cutting before each seed letter.
    """
    index = rs.index
    out = []
    for seg in _split_at(rs.seed_letter, w):
        if seg not in index:
            raise UnknownReturnWord(seg)
        out.append(index[seg])
    return tuple(out)


def return_bound(phi: Substitution) -> int:
    d = len(phi.alphabet)
    return 2 * d * d * max(phi.lengths) ** d


def compute_return_system(phi: Substitution, seed: FixedPointSeed) -> ReturnSystem:
    """Discover the return words by factorising images in FIFO order."""
    require_primitive(phi)
    base = power(phi, seed.power)
    a = seed.letter
    words: List[Word] = [first_return_word(phi, seed)]
    index = {words[0]: 0}
    bound = return_bound(base)
    tau_images = []
    i = 0
    while i < len(words):
        rules = []
        for seg in _split_at(a, apply(base, words[i])):
            if seg not in index:
                index[seg] = len(words)
                words.append(seg)
                if len(words) > bound:
                    raise ContractViolation(f"more than {bound} return words")
            rules.append(index[seg])
        tau_images.append(tuple(rules))
        i += 1
    tau = Substitution(Alphabet(tuple(range(len(words)))), tau_images)
    return ReturnSystem(
        base=base,
        seed_letter=a,
        words=tuple(words),
        tau=tau,
        m_tau=incidence_matrix(tau),
        lengths=tuple(len(w) for w in words),
    )
