import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morphic_gate.goldens import GOLDENS, PERIODIC
from morphic_gate.inputfmt import (
    DuplicateRule,
    EmptyImage,
    InputDocument,
    MissingLetters,
    MissingRule,
    ParseError,
    UndeclaredToken,
    parse_input,
)


def test_ex_return_parses():
    doc = parse_input(GOLDENS["ex_return"])
    assert doc.letters == ["a", "b", "c"] and doc.rules["c"] == list("cbcac") and doc.seed == "a"


def test_multichar_tokens_and_coding():
    doc = parse_input(GOLDENS["ex_gaps"])
    assert doc.letters == ["a", "abar", "b", "c"]
    assert doc.rules["abar"] == ["a", "abar", "c", "b"]
    assert doc.coding == {"a": "3", "abar": "3", "b": "4", "c": "2"}


@pytest.mark.parametrize("text", list(GOLDENS.values()) + list(PERIODIC.values()))
def test_round_trip(text):
    doc = parse_input(text)
    assert parse_input(doc.to_text()) == doc
    assert parse_input(doc.to_text()).to_text() == doc.to_text()


def test_empty_image_line():
    with pytest.raises(EmptyImage) as err:
        parse_input("letters = a b\na -> ab\nb -> \n")
    assert err.value.line == 3


def test_undeclared_token_position():
    with pytest.raises(UndeclaredToken) as err:
        parse_input("letters = a b\na -> a b\nb -> a x\n")
    assert (err.value.line, err.value.column) == (3, 8)


def test_joined_form_needs_single_char_letters():
    with pytest.raises(UndeclaredToken):
        parse_input("letters = a ab\na -> aab\nab -> a\n")


@pytest.mark.parametrize(
    "text,exc",
    [
        ("a -> ab\n", MissingLetters),
        ("letters =\n", MissingLetters),
        ("letters = a b\na -> ab\na -> b\nb -> a\n", DuplicateRule),
        ("letters = a b\na -> ab\n", MissingRule),
        ("letters = a b\na -> ab\nb -> a\n[coding]\na -> 0\n", MissingRule),
        ("letters = a b\na -> ab\nb -> a\n[coding]\na -> 0 1\nb -> 0\n", ParseError),
        ("letters = a b\nfoo = 1\n", ParseError),
        ("letters = a b\nseed = z\na -> ab\nb -> a\n", UndeclaredToken),
        ("letters = a a\n", ParseError),
        ("letters = a\nwhat\n", ParseError),
    ],
)
def test_errors(text, exc):
    with pytest.raises(exc):
        parse_input(text)


def test_comments_and_blank_lines():
    doc = parse_input("# header\n\nletters = a b   # two\na -> ab # x\nb -> a\n")
    assert doc.rules == {"a": ["a", "b"], "b": ["a"]}


token = st.text(alphabet="abcdefxyz", min_size=1, max_size=3)


@settings(max_examples=100, deadline=None)
@given(st.lists(token, min_size=1, max_size=4, unique=True), st.data())
def test_random_round_trip(letters, data):
    rules = {t: data.draw(st.lists(st.sampled_from(letters), min_size=1, max_size=5)) for t in letters}
    coding = data.draw(st.none() | st.fixed_dictionaries({t: st.sampled_from(["0", "1", "x"]) for t in letters}))
    seed = data.draw(st.none() | st.sampled_from(letters))
    doc = InputDocument(letters, rules, coding, seed)
    assert parse_input(doc.to_text()) == doc
