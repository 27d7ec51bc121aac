import pytest
from hypothesis import given, settings

from morphic_gate import linalg
from morphic_gate.errors import UnknownReturnWord
from morphic_gate.goldens import load
from morphic_gate.oracle import naive_prefix, naive_return_words
from morphic_gate.returns import compute_return_system, factorize_over_returns
from morphic_gate.words import apply, factors_of_length, find_fixed_point_seed, power, substitution

from conftest import primitive_substitutions


def _system(phi):
    return compute_return_system(phi, find_fixed_point_seed(phi))


def test_ex_return_words_and_tau():
    _, phi, _ = load("ex_return")
    rs = _system(phi)
    assert rs.render_words() == ["ac", "acbc"]
    assert rs.tau.images == ((0, 1, 0), (0, 1, 1, 1, 0))
    assert rs.m_tau == ((2, 2), (1, 3))
    assert rs.lengths == (2, 4)


def test_oracle_on_printed_prefix():
    _, phi, _ = load("ex_return")
    assert naive_return_words(phi.alphabet.word("acacbcac"), 0) == [(0, 2), (0, 2, 1, 2)]
    assert naive_return_words((0, 0, 0), 0) == [(0,)]
    with pytest.raises(ValueError):
        naive_return_words((0, 1), 0)


def test_ex_gaps_against_long_prefix():
    _, phi, _ = load("ex_gaps")
    rs = _system(phi)
    prefix = naive_prefix(phi.images, 0, 10**4)
    assert set(naive_return_words(prefix, 0)) == set(rs.words)


def _check_invariants(phi, rs, seed):
    a = rs.seed_letter
    for w in rs.words:
        assert w[0] == a and w.count(a) == 1
        assert tuple(w) + (a,) in factors_of_length(phi, seed, len(w) + 1)
    for i, w in enumerate(rs.words):
        image = apply(rs.base, w)
        assert tuple(c for j in rs.tau.images[i] for c in rs.words[j]) == image


def test_golden_invariants(golden):
    _, _, phi, _ = golden
    seed = find_fixed_point_seed(phi)
    _check_invariants(phi, compute_return_system(phi, seed), seed)


@settings(max_examples=60, deadline=None)
@given(primitive_substitutions())
def test_random_invariants(phi):
    seed = find_fixed_point_seed(phi)
    rs = compute_return_system(phi, seed)
    _check_invariants(phi, rs, seed)
    prefix = naive_prefix(phi.images, seed.letter, 3000, seed.power)
    if prefix.count(seed.letter) >= 2:
        assert set(naive_return_words(prefix, seed.letter)) <= set(rs.words)


@pytest.mark.parametrize("n", range(5))
def test_length_vector_identity(golden, n):
    _, _, phi, _ = golden
    rs = _system(phi)
    lhs = tuple(len(apply(power(rs.base, n), w)) for w in rs.words)
    assert lhs == linalg.vecmat(rs.lengths, linalg.matpow(rs.m_tau, n))


def test_factorize_rejects_foreign_segment():
    _, phi, _ = load("ex_return")
    rs = _system(phi)
    assert factorize_over_returns(rs, phi.alphabet.word("acacbc")) == (0, 1)
    with pytest.raises(UnknownReturnWord):
        factorize_over_returns(rs, phi.alphabet.word("abb"))


def test_seed_power_is_used():
    swap = substitution({"a": "ba", "b": "ab"})
    rs = _system(swap)
    assert rs.base.images == power(swap, 2).images
