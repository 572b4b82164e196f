"""
Tests for scalar matrices over finite fields
"""
import pytest

from polycensus.core.exceptions import DimensionMismatchError, SingularMatrixError
from polycensus.models.matrix import FieldMatrix


def test_rank_and_det(gf2, fm):
    M = fm(gf2, [[1, 1], [1, 1]])
    assert M.rank() == 1
    assert M.det().is_zero
    N = fm(gf2, [[0, 1], [1, 1]])
    assert N.rank() == 2
    assert N.det() == gf2.one


def test_inverse(gf3, fm, rng):
    for _ in range(30):
        M = FieldMatrix.random(gf3, 3, 3, rng)
        if not M.is_invertible():
            continue
        assert M @ M.inverse() == FieldMatrix.identity(gf3, 3)


def test_inverse_of_singular(gf3, fm):
    with pytest.raises(SingularMatrixError):
        fm(gf3, [[1, 2], [2, 1]]).inverse()


def test_det_over_extension(gf4, fm):
    """det [[x, 1], [1, x]] = x^2 - 1 = x over GF(4)"""
    M = fm(gf4, [[2, 1], [1, 2]])
    assert M.det().value == 2


def test_shape_checks(gf2, fm):
    with pytest.raises(DimensionMismatchError):
        fm(gf2, [[1, 0]]) @ fm(gf2, [[1, 0]])
    with pytest.raises(DimensionMismatchError):
        fm(gf2, [[1, 0], [1]])


def test_zero_sized_matrices(gf2):
    empty = FieldMatrix.zeros(gf2, 0, 2)
    assert empty.rank() == 0
    assert (FieldMatrix.zeros(gf2, 2, 0) @ empty).shape == (2, 2)


def test_unrank_enumerates_every_matrix(gf2):
    seen = {FieldMatrix.unrank(gf2, 2, 2, i) for i in range(FieldMatrix.space_size(gf2, 2, 2))}
    assert len(seen) == 16
    assert sum(1 for M in FieldMatrix.all_matrices(gf2, 2, 2) if M.is_invertible()) == 6


def test_stacking(gf3, fm):
    A = fm(gf3, [[1, 2]])
    B = fm(gf3, [[0, 1]])
    assert FieldMatrix.vstack(A, B) == fm(gf3, [[1, 2], [0, 1]])
    assert FieldMatrix.hstack(A, B) == fm(gf3, [[1, 2, 0, 1]])
    assert FieldMatrix.block_diag(A, B) == fm(gf3, [[1, 2, 0, 0], [0, 0, 0, 1]])


def test_power(gf2, fm):
    nilpotent = fm(gf2, [[0, 1], [0, 0]])
    assert nilpotent.power(2).is_zero()
    assert nilpotent.power(0) == FieldMatrix.identity(gf2, 2)
