import pytest
from hypothesis import assume, given, strategies as st

from mlvlab.exceptions import NotInvertible, ShapeMismatch
from mlvlab.linalg import PMatrix, complete_basis
from mlvlab.periodfield import ONE, ZERO, const

from .common import BaseTest, period, small_ints


def square_matrices(n):
    return st.lists(small_ints, min_size=n * n, max_size=n * n).map(
        lambda xs: PMatrix([xs[r * n:(r + 1) * n] for r in range(n)], n))


class TestPMatrix(BaseTest):

    def test_shape(self):
        assert PMatrix([[1, 2, 3]]).shape == (1, 3)
        assert PMatrix([], 2).shape == (0, 2)
        with pytest.raises(ShapeMismatch):
            PMatrix([[1, 2], [3]])

    def test_det(self):
        assert PMatrix([[1, 'pi'], [0, 2]]).det() == const(2)
        assert PMatrix([['log_2', 0], [0, 'pi']]).det() == period('pi*log_2')
        assert PMatrix([[1, 2], [2, 4]]).det() == ZERO
        assert PMatrix([], 0).det() == ONE
        with pytest.raises(ShapeMismatch):
            PMatrix([[1, 2]]).det()

    def test_inverse(self):
        m = PMatrix([['pi', 1], [0, 'log_3']])
        assert m @ m.inv() == PMatrix.identity(2)
        with pytest.raises(NotInvertible):
            PMatrix([[1, 1], [1, 1]]).inv()
        with pytest.raises(NotInvertible):
            PMatrix([[1, 1]]).inv()

    def test_matmul_shape(self):
        with pytest.raises(ShapeMismatch):
            PMatrix([[1, 2]]) @ PMatrix([[1, 2]])
        assert (PMatrix([[1, 2]]) @ PMatrix([[3], [4]])) == PMatrix([[11]])

    def test_rank_and_nullspace(self):
        m = PMatrix([[1, 1, 1], [0, 1, -1]])
        assert m.rank() == 2
        assert m.nullspace() == [(const(-2), const(1), const(1))]
        assert PMatrix.zeros(2, 3).rank() == 0
        assert len(PMatrix.zeros(2, 3).nullspace()) == 3

    def test_solve(self):
        m = PMatrix([[2, 0], [0, 'pi']])
        assert m.solve([4, 'pi']) == (const(2), ONE)
        assert PMatrix([[1, 1], [1, 1]]).solve([1, 2]) is None

    def test_block_diag(self):
        m = PMatrix.block_diag(PMatrix([[1]]), PMatrix([[2, 3], [4, 5]]))
        assert m == PMatrix([[1, 0, 0], [0, 2, 3], [0, 4, 5]])
        assert PMatrix.block_diag(PMatrix([], 0), PMatrix([], 0)).shape == (0, 0)

    def test_to_text(self):
        assert PMatrix([['1/2', 'log_2']]).to_text() == [['1/2', 'log_2']]

    def test_complete_basis(self):
        added = complete_basis([(ONE, ONE)], 2)
        assert added == [(ONE, ZERO)]
        assert complete_basis([], 0) == []
        assert len(complete_basis([], 3)) == 3


class TestProperties(BaseTest):

    @given(square_matrices(2), square_matrices(2))
    def test_det_is_multiplicative(self, a, b):
        assert (a @ b).det() == a.det() * b.det()

    @given(square_matrices(3))
    def test_inverse_round_trip(self, a):
        assume(a.det())
        assert a @ a.inv() == PMatrix.identity(3)
        assert a.inv() @ a == PMatrix.identity(3)

    @given(square_matrices(3))
    def test_rank_nullity(self, a):
        assert a.rank() + len(a.nullspace()) == 3
        for vec in a.nullspace():
            assert a @ PMatrix([[x] for x in vec], 1) == PMatrix.zeros(3, 1)

    @given(square_matrices(2))
    def test_transpose_keeps_det(self, a):
        assert a.T.det() == a.det()
