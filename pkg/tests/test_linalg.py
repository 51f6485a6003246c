"""Tests for exact rational linear algebra"""

from fractions import Fraction

import pytest

from src.linalg import (
    IncrementalEchelon,
    RationalMatrix,
    determinant,
    in_span,
    kernel_basis,
    rank,
    row_reduce,
    row_space_basis,
    solve,
)
from src.linalg.rational import axpy, normalize_leading, support
from src.utils.exceptions import DimensionMismatchError, InputValidationError

TRIANGLE = RationalMatrix([[-1, 0, 1], [1, -1, 0], [0, 1, -1]])


class TestRowReduce:
    """Reduced row-echelon form"""

    def test_identity_is_fixed(self):
        identity = RationalMatrix([[1, 0], [0, 1]])
        reduced, pivots = row_reduce(identity)
        assert reduced == identity
        assert pivots == [0, 1]

    def test_rank_of_incidence_matrix(self):
        assert rank(TRIANGLE) == 2

    def test_rank_of_zero_matrix(self):
        assert rank(RationalMatrix.zeros(2, 3)) == 0

    def test_fractions_stay_exact(self):
        reduced, _ = row_reduce(RationalMatrix([[3, 1]]))
        assert reduced[0, 1] == Fraction(1, 3)

    def test_repeated_row(self):
        reduced, pivots = row_reduce(RationalMatrix([[1, 1], [1, 1]]))
        assert reduced == RationalMatrix([[1, 1], [0, 0]])
        assert pivots == [0]

    @pytest.mark.parametrize(
        "matrix",
        [
            TRIANGLE,
            RationalMatrix([[2, 4, 1], [1, 2, 0], [3, 6, 1]]),
            RationalMatrix([[0, 3, -1, 2], [1, 1, 0, 0]]),
            RationalMatrix.zeros(2, 2),
        ],
    )
    def test_reduction_is_idempotent(self, matrix):
        reduced, pivots = row_reduce(matrix)
        assert row_reduce(reduced) == (reduced, pivots)

    @pytest.mark.parametrize(
        "matrix",
        [
            TRIANGLE,
            RationalMatrix([[1, 1], [-1, 1]]),
            RationalMatrix([[1, 1, 0, 0], [0, 1, 1, 1]]),
            RationalMatrix([[2, 4, 1], [1, 2, 0], [3, 6, 1]]),
            RationalMatrix.zeros(1, 3),
        ],
    )
    def test_rank_nullity(self, matrix):
        assert rank(matrix) + len(kernel_basis(matrix)) == matrix.cols


class TestKernelBasis:
    """Null space bases"""

    def test_triangle_kernel_is_all_ones(self):
        assert kernel_basis(TRIANGLE) == [(1, 1, 1)]

    def test_full_rank_has_empty_kernel(self):
        assert kernel_basis(RationalMatrix([[1, 1], [-1, 1]])) == []

    def test_basis_vectors_are_annihilated(self):
        matrix = RationalMatrix([[1, 1, 0, 0], [0, 1, 1, 1]])
        basis = kernel_basis(matrix)
        assert len(basis) == 2
        for vector in basis:
            assert matrix.annihilates(vector)
            assert next(a for a in vector if a != 0) == 1

    def test_zero_matrix_kernel_is_everything(self):
        assert len(kernel_basis(RationalMatrix.zeros(1, 3))) == 3


class TestSpanAndDeterminant:
    """Span membership, determinants and linear solves"""

    def test_in_span(self):
        basis = row_space_basis(TRIANGLE)
        assert in_span((-1, 0, 1), basis)
        assert not in_span((1, 1, 1), basis)

    def test_zero_vector_in_empty_span(self):
        assert in_span((0, 0), [])

    def test_in_span_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            in_span((1, 0), [(1, 0, 0)])

    def test_determinant_of_non_tu_matrix(self):
        assert determinant(RationalMatrix([[1, 1], [-1, 1]])) == 2

    def test_determinant_of_singular_matrix(self):
        assert determinant(TRIANGLE) == 0

    def test_determinant_needs_square(self):
        with pytest.raises(DimensionMismatchError):
            determinant(RationalMatrix([[1, 0, 0]]))

    def test_solve_consistent_system(self):
        solution = solve(RationalMatrix([[2, 0], [0, 4]]), [1, 1])
        assert solution == (Fraction(1, 2), Fraction(1, 4))

    def test_solve_inconsistent_system(self):
        assert solve(RationalMatrix([[1, 1], [1, 1]]), [0, 1]) is None


class TestMatrixBasics:
    """Construction and vector helpers"""

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatchError):
            RationalMatrix([[1, 0], [1]])

    def test_empty_matrix_rejected(self):
        with pytest.raises(InputValidationError):
            RationalMatrix([])

    def test_from_rows_empty_is_zero_row(self):
        assert RationalMatrix.from_rows([], 3) == RationalMatrix.zeros(1, 3)

    def test_apply_checks_dimension(self):
        with pytest.raises(DimensionMismatchError):
            TRIANGLE.apply((1, 1))

    def test_vector_helpers(self):
        assert support((0, 2, 0, -1)) == (1, 3)
        assert axpy(2, (1, 0), (0, 1)) == (2, 1)
        assert normalize_leading((0, -2, 4)) == (0, 1, -2)


class TestIncrementalEchelon:
    """Growing independence tests"""

    def test_detects_dependence(self):
        echelon = IncrementalEchelon().extended((1, 0, 1))
        echelon = echelon.extended((0, 1, 1))
        assert echelon is not None
        assert echelon.extended((1, 1, 2)) is None
        assert echelon.extended((0, 0, 1)) is not None

    def test_zero_vector_is_dependent(self):
        assert IncrementalEchelon().extended((0, 0)) is None
