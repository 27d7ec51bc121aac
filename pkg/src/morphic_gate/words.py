"""Alphabets, words, morphisms and the fixed points of substitutions.

A word is a tuple of letter indices into an :class:`Alphabet`; the letter
tokens themselves are opaque labels used only for input and output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, Mapping, Optional, Sequence, Tuple

from . import linalg
from .errors import AlphabetMismatch, FiniteSystemError, NonerasingError, NotPrimitiveError

Word = Tuple[int, ...]

DEFAULT_PERIODICITY_BOUND = 64


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[Hashable, ...]
    _index: Dict[Hashable, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        index = {tok: i for i, tok in enumerate(letters)}
        if len(index) != len(letters):
            raise ValueError(f"duplicate letters in {letters!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __contains__(self, token):
        return token in self._index

    def index(self, token) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise KeyError(f"letter {token!r} not in alphabet") from None

    def word(self, tokens: Iterable) -> Word:
        return tuple(self.index(t) for t in tokens)

    def render(self, w: Sequence[int], sep: str = "") -> str:
        return sep.join(str(self.letters[i]) for i in w)

    @property
    def single_char(self) -> bool:
        return all(isinstance(t, str) and len(t) == 1 for t in self.letters)


@dataclass(frozen=True)
class Morphism:
    """A nonerasing morphism from ``source`` letters to words over ``target``."""

    source: Alphabet
    target: Alphabet
    images: Tuple[Word, ...]

    def __post_init__(self):
        images = tuple(tuple(img) for img in self.images)
        if len(images) != len(self.source):
            raise ValueError("one image per source letter is required")
        n = len(self.target)
        for b, img in enumerate(images):
            if not img:
                raise NonerasingError(f"image of {self.source[b]!r} is empty")
            if any(not 0 <= c < n for c in img):
                raise AlphabetMismatch(f"image of {self.source[b]!r} leaves the target alphabet")
        object.__setattr__(self, "images", images)

    def __call__(self, w: Sequence[int]) -> Word:
        return apply(self, w)

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(len(img) for img in self.images)

    @property
    def constant_length(self) -> Optional[int]:
        """The common image length, or None if the lengths differ."""
        ls = set(self.lengths)
        return ls.pop() if len(ls) == 1 else None

    def render(self) -> str:
        sep = "" if self.target.single_char else " "
        return ", ".join(
            f"{self.source[b]}->{self.target.render(img, sep)}" for b, img in enumerate(self.images)
        )


class Substitution(Morphism):
    """A morphism of an alphabet into itself."""

    def __init__(self, alphabet: Alphabet, images: Iterable[Sequence[int]]):
        super().__init__(alphabet, alphabet, tuple(images))

    def __repr__(self):
        return f"Substitution({self.render()})"

    @property
    def alphabet(self) -> Alphabet:
        return self.source

    @property
    def left_proper(self) -> bool:
        return len({img[0] for img in self.images}) == 1

    def relabel(self, perm: Sequence[int]) -> "Substitution":
        """Rename letter ``i`` to position ``perm[i]`` of the new alphabet."""
        d = len(self.alphabet)
        letters = [None] * d
        images = [None] * d
        for i, j in enumerate(perm):
            letters[j] = self.alphabet[i]
            images[j] = tuple(perm[c] for c in self.images[i])
        return Substitution(Alphabet(tuple(letters)), images)


Coding = Morphism


def substitution(rules: Mapping, letters: Optional[Sequence] = None) -> Substitution:
    """Build a substitution from ``{letter: image}``.

    Images are strings of single-character letters or sequences of tokens::

        >>> substitution({"a": "aca", "b": "bca", "c": "cbcac"}).lengths
        (3, 3, 5)
    """
    alphabet = Alphabet(tuple(letters) if letters is not None else tuple(rules))
    images = [alphabet.word(rules[t]) for t in alphabet]
    return Substitution(alphabet, images)


def coding_from_map(source: Alphabet, mapping: Mapping) -> Coding:
    """A letter-to-letter morphism; target tokens keep first-seen order."""
    targets = []
    for t in source:
        out = mapping[t]
        if out not in targets:
            targets.append(out)
    target = Alphabet(tuple(targets))
    return Morphism(source, target, tuple((target.index(mapping[t]),) for t in source))


def apply(m: Morphism, w: Sequence[int]) -> Word:
    out = []
    images = m.images
    for c in w:
        if not 0 <= c < len(images):
            raise AlphabetMismatch(f"letter index {c} outside the source alphabet")
        out.extend(images[c])
    return tuple(out)


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """``compose(o, i)(w) == o(i(w))``."""
    if inner.target != outer.source:
        raise AlphabetMismatch("inner target differs from outer source")
    images = tuple(apply(outer, img) for img in inner.images)
    if inner.source == outer.target:
        return Substitution(inner.source, images)
    return Morphism(inner.source, outer.target, images)


def identity_substitution(alphabet: Alphabet) -> Substitution:
    return Substitution(alphabet, [(i,) for i in range(len(alphabet))])


def power(phi: Substitution, n: int) -> Substitution:
    if n < 0:
        raise ValueError("negative power")
    result = identity_substitution(phi.alphabet)
    for _ in range(n):
        result = compose(phi, result)
    return result


def incidence_matrix(phi: Morphism) -> linalg.IntMatrix:
    """Entry ``(a, b)`` counts the occurrences of ``a`` in ``phi(b)``."""
    d = len(phi.target)
    cols = []
    for img in phi.images:
        col = [0] * d
        for c in img:
            col[c] += 1
        cols.append(col)
    return tuple(tuple(col[a] for col in cols) for a in range(d))


@dataclass(frozen=True)
class Primitivity:
    primitive: bool
    witness_power: Optional[int] = None

    def __bool__(self):
        return self.primitive


def is_primitive(phi: Substitution) -> Primitivity:
    """Search ``M^n > 0`` for n up to the Wielandt bound ``(d-1)^2 + 1``."""
    d = len(phi.alphabet)
    pattern = tuple(tuple(int(x > 0) for x in row) for row in incidence_matrix(phi))
    current = pattern
    for n in range(1, (d - 1) ** 2 + 2):
        if all(all(row) for row in current):
            return Primitivity(True, n)
        current = tuple(tuple(int(x > 0) for x in row) for row in linalg.matmul(current, pattern))
    return Primitivity(False)


def require_primitive(phi: Substitution) -> Primitivity:
    p = is_primitive(phi)
    if not p:
        raise NotPrimitiveError(f"{phi.render()} is not primitive")
    return p


@dataclass(frozen=True)
class FixedPointSeed:
    """Seed letter of a fixed point of ``phi**power``.

    ``left`` is set for a two-sided point ``... left . letter ...``.
    """

    letter: int
    power: int = 1
    left: Optional[int] = None


def _iterate_letter_map(f: Sequence[int], start: int, e: int) -> int:
    for _ in range(e):
        start = f[start]
    return start


def _length_after(phi: Substitution, letter: int, e: int) -> int:
    ones = [1] * len(phi.alphabet)
    return linalg.vecmat(ones, linalg.matpow(incidence_matrix(phi), e))[letter]


def find_fixed_point_seed(
    phi: Substitution,
    preferred: Optional[int] = None,
    two_sided: bool = False,
    *,
    power: Optional[int] = None,
    left: Optional[int] = None,
) -> FixedPointSeed:
    """Least power ``e < d^2`` (then least letter) admitting a fixed point.

    ``preferred``/``left`` pin the right and left seed letters, ``power``
    pins ``e``.  With ``two_sided`` the left letter ``b`` must satisfy
    "``phi^e(b)`` ends with ``b``" and ``ba`` must be a 2-factor.
    """
    if max(phi.lengths) == 1:
        raise FiniteSystemError("every image has length 1; the fixed point is periodic")
    d = len(phi.alphabet)
    first = [img[0] for img in phi.images]
    last = [img[-1] for img in phi.images]
    two_sided = two_sided or left is not None
    powers = [power] if power is not None else range(1, max(d * d, 2))
    letters = [preferred] if preferred is not None else range(d)
    factors2 = None
    for e in powers:
        for a in letters:
            if _iterate_letter_map(first, a, e) != a or _length_after(phi, a, e) < 2:
                continue
            if not two_sided:
                return FixedPointSeed(a, e)
            if factors2 is None:
                factors2 = two_factor_language(phi, FixedPointSeed(a, e))
            lefts = [left] if left is not None else range(d)
            for b in lefts:
                if _iterate_letter_map(last, b, e) == b and (b, a) in factors2:
                    return FixedPointSeed(a, e, b)
    raise ValueError("no admissible fixed-point seed within the search bound")


def _truncated_image(phi: Substitution, letter: int, e: int, cap: int) -> Word:
    w: Word = (letter,)
    for _ in range(e):
        w = apply(phi, w[:cap])[:cap]
    return w


def expand_prefix(phi: Substitution, seed: FixedPointSeed, length: int) -> Word:
    """The first ``length`` letters of the one-sided fixed point of ``phi**seed.power``."""
    if length <= 0:
        return ()
    cache: Dict[int, Word] = {}

    def image(b):
        if b not in cache:
            cache[b] = _truncated_image(phi, b, seed.power, length)
        return cache[b]

    out = list(image(seed.letter))
    if out[0] != seed.letter:
        raise ValueError("seed letter is not a fixed point start")
    i = 1
    while len(out) < length:
        out.extend(image(out[i])[: length - len(out)])
        i += 1
    return tuple(out[:length])


def _two_factors(w: Sequence[int]):
    return {(w[i], w[i + 1]) for i in range(len(w) - 1)}


def two_factor_language(phi: Substitution, seed: FixedPointSeed) -> FrozenSet[Tuple[int, int]]:
    """Length-2 factors of the fixed point, by closure under ``phi``."""
    found = _two_factors(expand_prefix(phi, seed, 2))
    todo = list(found)
    while todo:
        de = todo.pop()
        for f in _two_factors(apply(phi, de)):
            if f not in found:
                found.add(f)
                todo.append(f)
    return frozenset(found)


def factors_of_length(phi: Substitution, seed: FixedPointSeed, n: int) -> FrozenSet[Word]:
    """Exact set of length-``n`` factors of the fixed point.

    Once every ``phi^m(b)`` has length at least n, each window of length n
    of the fixed point sits inside ``phi^m(de)`` for a 2-factor ``de``.
    """
    if n < 1:
        raise ValueError("factor length must be positive")
    if max(phi.lengths) == 1:
        raise FiniteSystemError("every image has length 1; the fixed point is periodic")
    images = [(b,) for b in range(len(phi.alphabet))]
    while min(map(len, images)) < n:
        images = [apply(phi, w) for w in images]
    out = set()
    for d, e in two_factor_language(phi, seed):
        w = images[d] + images[e]
        out.update(w[i : i + n] for i in range(len(w) - n + 1))
    return frozenset(out)


@dataclass(frozen=True)
class PeriodicityReport:
    """Outcome of the bounded Morse-Hedlund probe.

    ``periodic`` is a certificate (``p(certified_at) <= certified_at``).
    Otherwise ``p(n) >= n + 1`` was checked only for ``n <= bound``; that is
    evidence of aperiodicity, not a proof.
    """

    periodic: bool
    bound: int
    complexity: Tuple[int, ...]
    certified_at: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.periodic


def factor_complexity(
    phi: Substitution, seed: FixedPointSeed, coding: Optional[Coding] = None, n_max: int = 1
) -> Tuple[int, ...]:
    """Exact ``p(1..n_max)`` of the (coded) fixed point."""
    long_factors = factors_of_length(phi, seed, n_max)
    if coding is not None:
        long_factors = {tuple(coding.images[c][0] for c in f) for f in long_factors}
    return tuple(len({f[:n] for f in long_factors}) for n in range(1, n_max + 1))


def periodicity_probe(
    phi: Substitution,
    seed: FixedPointSeed,
    coding: Optional[Coding] = None,
    bound: int = DEFAULT_PERIODICITY_BOUND,
) -> PeriodicityReport:
    if max(phi.lengths) == 1:
        # primitive with all images of length 1 forces a one-letter alphabet
        return PeriodicityReport(True, bound, (1,), 1)
    long_factors = factors_of_length(phi, seed, bound)
    if coding is not None:
        long_factors = {tuple(coding.images[c][0] for c in f) for f in long_factors}
    complexity = []
    for n in range(1, bound + 1):
        p = len({f[:n] for f in long_factors})
        complexity.append(p)
        if p <= n:
            return PeriodicityReport(True, bound, tuple(complexity), n)
    return PeriodicityReport(False, bound, tuple(complexity))
