from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from apolar.linalg import (
    RationalMatrix,
    echelon_with_combinations,
    reduce_against,
)


def test_rank_identity():
    assert RationalMatrix.identity(2).rank() == 2


def test_rank_zero_matrix():
    assert RationalMatrix.zeros(3, 4).rank() == 0


def test_rank_proportional_rows():
    assert RationalMatrix([[1, 2], [2, 4]]).rank() == 1


def test_rank_rational_entries():
    # det = 1/2 - (1/3)(3/2) = 0, so the rows are dependent
    assert RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]).rank() == 1
    assert RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), 1]]).rank() == 2


def test_solve_zero_rhs():
    M = RationalMatrix([[1, 2, 3], [4, 5, 6]])
    assert M.solve([0, 0]) == (0, 0, 0)


def test_solve_identity():
    assert RationalMatrix.identity(2).solve([3, 5]) == (3, 5)


def test_solve_inconsistent():
    M = RationalMatrix([[1, 0], [1, 0]])
    assert M.solve([1, 2]) is None


def test_solve_free_variables_zero():
    M = RationalMatrix([[1, 1, 0], [0, 0, 1]])
    x = M.solve([5, 7])
    assert x == (5, 0, 7)
    assert M.apply(x) == (5, 7)


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        RationalMatrix.identity(2).solve([1, 2, 3])


def test_kernel_identity_empty():
    assert RationalMatrix.identity(3).kernel_basis() == []


def test_kernel_zero_matrix():
    basis = RationalMatrix.zeros(2, 3).kernel_basis()
    assert len(basis) == 3


def test_kernel_single_row():
    (v,) = RationalMatrix([[1, 1]]).kernel_basis()
    assert v[0] * (-1) == v[1] and v[0] != 0


def test_stacked_and_transpose():
    A = RationalMatrix([[1, 2], [3, 4]])
    B = RationalMatrix([[5, 6]])
    S = RationalMatrix.stacked([A, B])
    assert S.rows == 3 and S.row(2) == (5, 6)
    assert S.transpose().column(2) == (5, 6)


def test_matmul():
    A = RationalMatrix([[1, 2], [3, 4]])
    I = RationalMatrix.identity(2)
    assert A @ I == A
    assert (A @ A).row(0) == (7, 10)


def test_from_columns_round_trip():
    A = RationalMatrix([[1, 2, 3], [4, 5, 6]])
    assert RationalMatrix.from_columns([A.column(j) for j in range(3)]) == A


def test_rref_pivots_and_reduction():
    M = RationalMatrix([[0, 2, 4], [1, 1, 1]])
    red, pivots = M.rref()
    assert pivots == (0, 1)
    assert red.row(0) == (1, 0, -1)
    assert red.row(1) == (0, 1, 2)


def test_echelon_with_combinations_reconstructs():
    vectors = [(1, 2, 3), (2, 4, 6), (0, 1, 1)]
    ech = echelon_with_combinations(vectors)
    assert len(ech) == 2
    for row, combo in ech:
        rebuilt = [
            sum(combo[k] * Fraction(vectors[k][i]) for k in range(3)) for i in range(3)
        ]
        assert tuple(rebuilt) == row


def test_reduce_against_full_membership():
    vectors = [(1, 0, 1), (0, 1, 1)]
    ech = echelon_with_combinations(vectors)
    residual, combo = reduce_against(ech, (2, 3, 5))
    assert residual == (0, 0, 0)
    assert combo == (2, 3)


def test_reduce_against_partial():
    vectors = [(1, 0, 0)]
    ech = echelon_with_combinations(vectors)
    residual, combo = reduce_against(ech, (4, 1, 0))
    assert residual == (0, 1, 0)
    assert combo == (4,)


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
)


@st.composite
def matrices(draw, max_dim=5):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    data = draw(
        st.lists(
            st.lists(small_fractions, min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return RationalMatrix(data)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_round_trip(M, data):
    x = [
        data.draw(small_fractions, label=f"x{j}") for j in range(M.cols)
    ]
    b = M.apply(x)
    got = M.solve(b)
    assert got is not None
    assert M.apply(got) == b


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_equals_transpose_rank(M):
    assert M.rank() == M.transpose().rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(M):
    for v in M.kernel_basis():
        assert all(x == 0 for x in M.apply(v))
    assert M.rank() + len(M.kernel_basis()) == M.cols


@settings(max_examples=40, deadline=None)
@given(matrices(), st.data())
def test_rank_invariant_under_row_scaling(M, data):
    scales = [
        data.draw(st.sampled_from([Fraction(1, 2), 2, -3, Fraction(5, 3)]))
        for _ in range(M.rows)
    ]
    scaled = RationalMatrix(
        [[scales[i] * x for x in M.row(i)] for i in range(M.rows)]
    )
    assert scaled.rank() == M.rank()
