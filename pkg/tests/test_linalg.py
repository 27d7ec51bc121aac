from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from morphic_gate import linalg
from morphic_gate.errors import OrbitCapExceeded
from morphic_gate.oracle import brute_eigen_scan, is_eigenvector

square = st.integers(1, 5).flatmap(
    lambda d: st.lists(st.lists(st.integers(-6, 6), min_size=d, max_size=d), min_size=d, max_size=d)
)


@settings(max_examples=150, deadline=None)
@given(square)
def test_rank_and_det_match_sympy(rows):
    m = sympy.Matrix(rows)
    assert linalg.rank(rows) == m.rank()
    assert linalg.determinant(linalg.as_matrix(rows)) == m.det()


def _jordan_nilpotent(blocks, unimodular):
    """Nilpotent part with the given block sizes, conjugated by a unimodular matrix."""
    d = sum(blocks)
    j = sympy.zeros(d, d)
    pos = 0
    for b in blocks:
        for i in range(b - 1):
            j[pos + i, pos + i + 1] = 1
        pos += b
    u = sympy.Matrix(unimodular)
    return u * j * u.inv()


unimodular_4 = [[1, 2, 0, 1], [0, 1, 3, 0], [0, 0, 1, 2], [0, 0, 0, 1]]


@pytest.mark.parametrize("blocks,expected", [((1, 1, 1, 1), 1), ((2, 1, 1), 2), ((2, 2), 2), ((3, 1), 3), ((4,), 4)])
def test_nilpotency_index_of_conjugated_jordan_blocks(blocks, expected):
    n = _jordan_nilpotent(blocks, unimodular_4)
    # add an invertible block on a separate coordinate to keep it non-trivial
    m = sympy.diag(n, sympy.Matrix([[3]]))
    assert all(x == int(x) for x in m)
    assert linalg.nilpotency_index(linalg.as_matrix(m.tolist())) == expected


def test_nilpotency_index_invertible_is_zero():
    assert linalg.nilpotency_index(((2, 1), (1, 1))) == 0


def test_left_eigenvector_test():
    m = ((2, 2), (1, 3))
    assert linalg.left_eigenvector_test((2, 4), m) == Fraction(4)
    assert linalg.left_eigenvector_test((1, 1), m) is None
    with pytest.raises(ValueError):
        linalg.left_eigenvector_test((0, 0), m)


def test_eigen_reduce_ex_optimal():
    m = ((4, 3, 1), (4, 1, 3), (4, 1, 3))
    red = linalg.eigen_index_reduce((1, 1, 1), m)
    assert red.s == 2 and red.v_s == (96, 48, 48) and red.eigen == 8
    assert brute_eigen_scan((1, 1, 1), m, 5) == (2, 8)


random_4x4 = st.lists(st.lists(st.integers(0, 4), min_size=4, max_size=4), min_size=4, max_size=4)
positive_4 = st.lists(st.integers(1, 9), min_size=4, max_size=4)


@settings(max_examples=200, deadline=None)
@given(random_4x4, positive_4)
def test_reduce_agrees_with_brute_scan(rows, v0):
    m = linalg.as_matrix(rows)
    red = linalg.eigen_index_reduce(v0, m)
    hits = []
    v = list(v0)
    for n in range(red.s + 5):
        lam = is_eigenvector(v, m)
        if lam:
            hits.append((n, lam))
        v = list(linalg.vecmat(v, m))
    # the reduction speaks about nonzero eigenvalues only
    assert bool(hits) == bool(red.eigen)
    if hits:
        assert hits[0][0] <= red.s and hits[0][1] == red.eigen
        assert brute_eigen_scan(v0, m, red.s) is not None


def test_zero_eigenvalue_is_outside_the_reduction():
    zero = ((0, 0), (0, 0))
    assert brute_eigen_scan((1, 1), zero, 3) == (0, 0)
    red = linalg.eigen_index_reduce((1, 1), zero)
    assert red.s == 1 and red.v_s == (0, 0) and red.eigen is None


def test_modular_orbit_closed_forms():
    # lengths of a->abbbba, b->aa are (1,1)·M^n
    m = ((2, 2), (4, 0))
    assert linalg.modular_orbit((1, 1), m, 8).hit is not None
    orb = linalg.modular_orbit((1, 1), m, 3)
    assert orb.hit is None and orb.period >= 1
    with pytest.raises(OrbitCapExceeded):
        linalg.modular_orbit((1, 1), ((1, 1), (1, 0)), 10**6 + 3, cap=50)
