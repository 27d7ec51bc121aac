import pytest
from hypothesis import strategies as st

from morphic_gate import goldens, is_primitive
from morphic_gate.words import Alphabet, Substitution

GOLDEN_NAMES = sorted(goldens.GOLDENS)


@pytest.fixture(params=GOLDEN_NAMES)
def golden(request):
    return (request.param,) + goldens.load(request.param)


@st.composite
def primitive_substitutions(draw, max_letters=3, max_len=4):
    """Random primitive substitutions with at least one image of length >= 2."""
    d = draw(st.integers(2, max_letters))
    images = draw(
        st.lists(
            st.lists(st.integers(0, d - 1), min_size=1, max_size=max_len),
            min_size=d,
            max_size=d,
        )
    )
    phi = Substitution(Alphabet(tuple("abcdefg"[:d])), [tuple(w) for w in images])
    from hypothesis import assume

    assume(max(phi.lengths) >= 2 and is_primitive(phi))
    return phi


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
