"""Line-oriented substitution files.

::

    # ex:return
    letters = a b c
    seed = a
    a -> a c a
    b -> bca          # single-character letters may be written run together
    c -> c b c a c
    [coding]
    a -> 0
    b -> 1
    c -> 0

``left = <letter>`` selects a two-sided seed.  Tokens never contain
whitespace or ``#``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import MorphicError
from .words import Coding, Substitution, coding_from_map, substitution


class ParseError(MorphicError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.column = column


class UndeclaredToken(ParseError):
    pass


class DuplicateRule(ParseError):
    pass


class EmptyImage(ParseError):
    pass


class MissingLetters(ParseError):
    pass


class MissingRule(ParseError):
    pass


@dataclass
class InputDocument:
    letters: List[str]
    rules: Dict[str, List[str]]
    coding: Optional[Dict[str, str]] = None
    seed: Optional[str] = None
    left: Optional[str] = None

    def substitution(self) -> Substitution:
        return substitution(self.rules, self.letters)

    def coding_morphism(self, phi: Substitution) -> Optional[Coding]:
        if self.coding is None:
            return None
        return coding_from_map(phi.alphabet, self.coding)

    def to_text(self) -> str:
        joined = all(len(t) == 1 for t in self.letters)
        lines = ["letters = " + " ".join(self.letters)]
        if self.seed is not None:
            lines.append(f"seed = {self.seed}")
        if self.left is not None:
            lines.append(f"left = {self.left}")
        for t in self.letters:
            body = "".join(self.rules[t]) if joined else " ".join(self.rules[t])
            lines.append(f"{t} -> {body}")
        if self.coding is not None:
            lines.append("[coding]")
            lines.extend(f"{t} -> {self.coding[t]}" for t in self.letters)
        return "\n".join(lines) + "\n"


def _column(raw: str, token: str, start: int = 0) -> int:
    return raw.find(token, start) + 1


def parse_input(text: str) -> InputDocument:
    letters: Optional[List[str]] = None
    rules: Dict[str, List[str]] = {}
    coding: Optional[Dict[str, str]] = None
    settings: Dict[str, Tuple[str, int]] = {}
    rule_lines: List[Tuple[int, str, str, str]] = []
    coding_lines: List[Tuple[int, str, str, str]] = []
    section = "rules"

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "[coding]":
            section = "coding"
            coding = {}
            continue
        if "->" in line:
            lhs, rhs = (part.strip() for part in line.split("->", 1))
            if not lhs or len(lhs.split()) != 1:
                raise ParseError("rule needs exactly one letter on the left", lineno)
            (coding_lines if section == "coding" else rule_lines).append((lineno, raw, lhs, rhs))
            continue
        if "=" in line and section == "rules":
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "letters":
                letters = value.split()
                if not letters:
                    raise MissingLetters("empty letters declaration", lineno)
                if len(set(letters)) != len(letters):
                    raise ParseError("duplicate letter in declaration", lineno)
            elif key in ("seed", "left"):
                settings[key] = (value, lineno)
            else:
                raise ParseError(f"unknown setting {key!r}", lineno)
            continue
        raise ParseError(f"cannot parse {line!r}", lineno)

    if letters is None:
        raise MissingLetters("missing 'letters = ...' declaration")
    declared = set(letters)
    joined = all(len(t) == 1 for t in letters)

    def check(token, lineno, raw, start=0):
        if token not in declared:
            raise UndeclaredToken(f"undeclared letter {token!r}", lineno, _column(raw, token, start))

    for lineno, raw, lhs, rhs in rule_lines:
        check(lhs, lineno, raw)
        if lhs in rules:
            raise DuplicateRule(f"second rule for {lhs!r}", lineno)
        tokens = rhs.split()
        if not tokens:
            raise EmptyImage(f"empty image for {lhs!r}", lineno)
        if joined and len(tokens) == 1:
            tokens = list(tokens[0])
        arrow = raw.find("->") + 2
        for tok in tokens:
            check(tok, lineno, raw, arrow)
        rules[lhs] = tokens
    for t in letters:
        if t not in rules:
            raise MissingRule(f"no rule for letter {t!r}")

    if coding is not None:
        for lineno, raw, lhs, rhs in coding_lines:
            check(lhs, lineno, raw)
            if lhs in coding:
                raise DuplicateRule(f"second coding entry for {lhs!r}", lineno)
            if len(rhs.split()) != 1:
                raise ParseError("coding image must be a single token", lineno)
            coding[lhs] = rhs
        for t in letters:
            if t not in coding:
                raise MissingRule(f"coding has no entry for {t!r}")

    doc = InputDocument(letters, rules, coding)
    for key, (value, lineno) in settings.items():
        check(value, lineno, text.splitlines()[lineno - 1])
        setattr(doc, key, value)
    return doc
