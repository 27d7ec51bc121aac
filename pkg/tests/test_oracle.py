import pytest

from morphic_gate import linalg
from morphic_gate.goldens import load
from morphic_gate.oracle import (
    brute_eigen_scan,
    factor_complexity_curve,
    is_eigenvector,
    kernel_census,
    naive_prefix,
    sequence_kernel_census,
)
from morphic_gate.words import incidence_matrix


def test_brute_eigen_scan_examples():
    assert brute_eigen_scan((1, 1, 1), ((4, 3, 1), (4, 1, 3), (4, 1, 3)), 5) == (2, 8)
    assert brute_eigen_scan((2, 4), ((2, 2), (1, 3)), 3) == (0, 4)
    _, psi, _ = load("ex_gaps")
    assert brute_eigen_scan((4, 4, 5, 3), incidence_matrix(psi), 6) is None


def test_is_eigenvector_uses_no_division():
    assert is_eigenvector((96, 48, 48), ((4, 3, 1), (4, 1, 3), (4, 1, 3))) == 8
    assert is_eigenvector((94, 48, 48), ((4, 3, 1), (4, 1, 3), (4, 1, 3))) is None
    assert is_eigenvector((0, 0), ((1, 0), (0, 1))) is None


def test_naive_prefix_rejects_stalled_growth():
    with pytest.raises(ValueError):
        naive_prefix(((0,), (1,)), 0, 5)


def test_complexity_curve_bounds():
    with pytest.raises(ValueError):
        factor_complexity_curve("abc", 3)


def test_kernel_census_on_period_two():
    census = sequence_kernel_census([0, 1] * 512, 2, 3, 64)
    assert census.counts == (1, 3, 3, 3) and census.stabilized


def test_kernel_census_ex_return_stabilizes():
    _, phi, _ = load("ex_return")
    census = kernel_census(phi, None, 2, 6, 256)
    assert census.stabilized and census.counts[-1] == 6
    assert list(census.counts) == sorted(census.counts)


def test_kernel_census_needs_long_prefix():
    with pytest.raises(ValueError):
        sequence_kernel_census([0] * 10, 2, 3, 4)


def test_optimal_matrix_eigen_reduction_matches_oracle():
    m = ((4, 3, 1), (4, 1, 3), (4, 1, 3))
    red = linalg.eigen_index_reduce((1, 1, 1), m)
    assert brute_eigen_scan((1, 1, 1), m, red.s) == (red.s, red.eigen)
