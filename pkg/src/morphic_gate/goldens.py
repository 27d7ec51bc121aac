"""Worked examples used by the tests, the acceptance run and the scripts.

Each entry is the text of an input file; :func:`load` parses it.  The
``data/`` directory at the repository root holds the same texts as files.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .inputfmt import InputDocument, parse_input
from .words import Coding, Substitution

EX_RETURN = """\
# non-left-proper, 2-automatic fixed point acabacab...
letters = a b c
seed = a
a -> aca
b -> bca
c -> cbcac
"""

EX_GAPS = """\
# gaps between occurrences of 01 in Thue-Morse, squared to be left-proper
letters = a abar b c
seed = a
a -> a abar b c
abar -> a abar c b
b -> a abar b c b
c -> a abar c
[coding]
a -> 3
abar -> 3
b -> 4
c -> 2
"""

KOLAM = """\
letters = G D
seed = G
G -> GDD
D -> G
"""

EX_SPECTRAL = """\
letters = a b
seed = a
a -> abbbba
b -> aa
"""

EX_OPTIMAL = """\
# M = [[4,3,1],[4,1,3],[4,1,3]]; eigenvalues 8, 0, 0 with a size-2 block at 0
letters = a b c
seed = a
a -> aaaabbbbcccc
b -> abcaa
c -> abbbccc
"""

EX_MATRIX_PRIME = """\
# same incidence matrix as EX_RETURN, but left-proper
letters = a b c
seed = a
a -> aca
b -> acb
c -> abccc
"""

# Substitutions whose (coded) fixed points are periodic.
PERIODIC = {
    "ab_ab": "letters = a b\na -> ab\nb -> ab\n",
    "abc_cycle": "letters = a b c\na -> abc\nb -> abc\nc -> abc\n",
    "aab": "letters = a b\na -> aab\nb -> aab\n",
    "thue_morse_flat": "letters = a b\na -> ab\nb -> ba\n[coding]\na -> 0\nb -> 0\n",
    "fibonacci_flat": "letters = a b\na -> ab\nb -> a\n[coding]\na -> x\nb -> x\n",
}

GOLDENS: Dict[str, str] = {
    "ex_return": EX_RETURN,
    "ex_gaps": EX_GAPS,
    "kolam": KOLAM,
    "ex_spectral": EX_SPECTRAL,
    "ex_optimal": EX_OPTIMAL,
    "ex_matrix_prime": EX_MATRIX_PRIME,
}

# Merged DFAO for EX_RETURN (returns basis, n = 0, k = 4).
EX_RETURN_DFAO = """\
k=4 states=4 start=0
0 a 0 1 0 2
1 c 3 1 0 1
2 c 3 1 0 2
3 b 3 1 0 2
"""


def load(name: str) -> Tuple[InputDocument, Substitution, Optional[Coding]]:
    text = GOLDENS[name] if name in GOLDENS else PERIODIC[name]
    doc = parse_input(text)
    phi = doc.substitution()
    return doc, phi, doc.coding_morphism(phi)
