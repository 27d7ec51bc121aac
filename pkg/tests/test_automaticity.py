import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from morphic_gate import (
    Automatic,
    NotAutomatic,
    Periodic,
    UnresolvedPeriodicity,
    analyze,
    decide,
    decide_left_proper,
    minimal_root,
    nonsingular_shortcut,
    substitution,
)
from morphic_gate.errors import NotLeftProperError, NotPrimitiveError
from morphic_gate.goldens import PERIODIC, load
from morphic_gate.words import find_fixed_point_seed, power

from conftest import primitive_substitutions


def test_ex_return_is_4_automatic():
    _, phi, _ = load("ex_return")
    v = decide(phi)
    assert isinstance(v, Automatic)
    assert (v.k, v.minimal_root, v.s, v.eigenvector) == (4, 2, 0, (2, 4))


def test_ex_gaps_both_paths():
    _, phi, rho = load("ex_gaps")
    lp = decide_left_proper(phi, rho)
    assert isinstance(lp, NotAutomatic)
    assert lp.s == 1 and lp.v_s == (4, 4, 5, 3) and lp.v_s_times_m == (16, 16, 21, 11)
    assert tuple(4 * x for x in lp.v_s) == (16, 16, 20, 12)
    assert isinstance(decide(phi, rho), NotAutomatic)


def test_kolam():
    _, phi, _ = load("kolam")
    short = nonsingular_shortcut(phi)
    assert isinstance(short, NotAutomatic) and short.v_s_times_m == (3, 1)
    assert isinstance(decide(phi), NotAutomatic)


def test_ex_optimal_needs_full_s():
    _, phi, _ = load("ex_optimal")
    v = decide_left_proper(phi)
    # the printed (94, 48, 48) is not an eigenvector; direct expansion gives 96
    assert isinstance(v, Automatic) and v.s == 2 and v.eigenvector == (96, 48, 48) and v.k == 8
    assert isinstance(decide(phi), Automatic)


def test_same_matrix_different_verdicts():
    _, phi, _ = load("ex_return")
    _, phi2, _ = load("ex_matrix_prime")
    from morphic_gate.words import incidence_matrix

    assert incidence_matrix(phi) == incidence_matrix(phi2)
    assert isinstance(decide(phi), Automatic)
    assert isinstance(decide(phi2), NotAutomatic)
    assert isinstance(nonsingular_shortcut(phi2), NotAutomatic)


def test_constant_length_example_with_singular_matrix():
    phi = substitution({"0": "010", "1": "001"})
    assert nonsingular_shortcut(phi) is None
    v = decide_left_proper(phi)
    assert isinstance(v, Automatic) and v.k == 3 and v.s == 1


def test_left_proper_required():
    with pytest.raises(NotLeftProperError):
        decide_left_proper(load("ex_return")[1])
    assert nonsingular_shortcut(load("ex_return")[1]) is None


def test_not_primitive():
    with pytest.raises(NotPrimitiveError):
        decide(substitution({"a": "ab", "b": "b"}))


@pytest.mark.parametrize("name", sorted(PERIODIC))
def test_periodic_constructions(name):
    _, phi, coding = load(name)
    assert isinstance(decide(phi, coding), Periodic)


def test_strict_and_assume_flags():
    _, phi, _ = load("ex_return")
    assert isinstance(decide(phi, periodicity_bound=8, strict=True), UnresolvedPeriodicity)
    assert isinstance(decide(phi, periodicity_bound=8, strict=True, assume_nonperiodic=True), Automatic)
    v = decide(phi, periodicity_bound=8)
    assert v.assumes_nonperiodic and v.evidence_bound == 8


def test_single_letter_is_periodic():
    assert isinstance(decide(substitution({"a": "aa"})), Periodic)


@pytest.mark.parametrize("k,root", [(2, 2), (4, 2), (8, 2), (9, 3), (12, 12), (64, 2), (36, 6), (3**40, 3)])
def test_minimal_root(k, root):
    assert minimal_root(k) == root


def test_minimal_root_rejects_small():
    with pytest.raises(ValueError):
        minimal_root(1)


def _signature(v):
    if isinstance(v, Automatic):
        return ("Automatic", v.minimal_root)
    return (v.kind,)


@settings(max_examples=60, deadline=None)
@given(primitive_substitutions(), st.data())
def test_invariant_under_relabelling(phi, data):
    perm = data.draw(st.permutations(range(len(phi.alphabet))))
    seed = find_fixed_point_seed(phi)
    assume(seed.power == 1)
    before = decide(phi, seed_hint=seed.letter, periodicity_bound=40)
    after = decide(phi.relabel(perm), seed_hint=perm[seed.letter], periodicity_bound=40)
    assert _signature(before) == _signature(after)
    if isinstance(before, (Automatic, NotAutomatic)):
        assert before.s == after.s
        assert sorted(before.v_s if isinstance(before, NotAutomatic) else before.eigenvector) == sorted(
            after.v_s if isinstance(after, NotAutomatic) else after.eigenvector
        )


@settings(max_examples=60, deadline=None)
@given(primitive_substitutions())
def test_invariant_under_squaring(phi):
    seed = find_fixed_point_seed(phi)
    before = decide(phi, seed_hint=seed.letter, power=seed.power, periodicity_bound=40)
    after = decide(power(phi, 2), seed_hint=seed.letter, power=seed.power, periodicity_bound=40)
    assert _signature(before) == _signature(after)
    if isinstance(before, Automatic):
        assert after.k == before.k**2


def test_goldens_squared(golden):
    _, _, phi, coding = golden
    assert _signature(decide(phi, coding)) == _signature(decide(power(phi, 2), coding))


def test_analysis_keeps_intermediates():
    _, phi, _ = load("ex_return")
    a = analyze(phi)
    assert a.return_system.m_tau == a.matrix and a.reduction.eigen == 4
    assert a.primitivity.witness_power == 2 and a.seed.letter == 0
