"""
Tests for Hermite and Kronecker-Hermite forms, gcrd and exact division
"""
import numpy as np
import pytest

from polycensus.core.exceptions import (
    DimensionMismatchError,
    NonExactDivisionError,
    SingularMatrixError,
)
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.polynomial import Poly
from polycensus.properties.spaces import HermiteFormSpace
from polycensus.services.canonical_forms import (
    column_echelon,
    exact_right_divide,
    gcrd,
    hermite_form,
    kronecker_hermite_form,
)
from polycensus.services.formulas import hermite_count
from polycensus.services.polynomials import random_below_degree
from polycensus.services.primeness import is_unimodular


def elementary_unimodular(field, size, rng, steps=4):
    """Product of column additions c z^k E_ij and column swaps"""
    V = PolyMatrix.identity(field, size)
    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(size, 2, replace=False))
        rows = V.to_rows()
        if rng.random() < 0.25:
            for r in rows:
                r[i], r[j] = r[j], r[i]
        else:
            factor = Poly.monomial(field, int(rng.integers(0, 3)), int(rng.integers(1, field.size)))
            for r in rows:
                r[j] = r[j] + factor * r[i]
        V = PolyMatrix.from_rows(field, rows)
    return V


def test_hermite_of_unimodular_is_identity(gf2, pm):
    U = pm(gf2, [[[1], [0, 1]], [[0], [1]]])
    form, V = hermite_form(U)
    assert form.matrix == PolyMatrix.identity(gf2, 2)
    assert U @ V == form.matrix


def test_hermite_form_properties(gf3, random_nonsingular):
    for _ in range(10):
        Q = random_nonsingular(gf3, 3)
        form, U = hermite_form(Q)
        assert form.check_invariants()
        assert Q @ U == form.matrix
        assert is_unimodular(U)
        assert sum(form.row_degrees) == Q.det().degree
        assert form.kappa == tuple(reversed(form.row_degrees))


def test_hermite_form_idempotent(gf3, random_nonsingular):
    for _ in range(10):
        form, _ = hermite_form(random_nonsingular(gf3, 2))
        again, _ = hermite_form(form.matrix)
        assert again.matrix == form.matrix


def test_hermite_form_unimodular_invariance(gf3, random_nonsingular, rng):
    """H(Q V) = H(Q) for unimodular V"""
    for _ in range(10):
        Q = random_nonsingular(gf3, 3)
        V = elementary_unimodular(gf3, 3, rng)
        assert hermite_form(Q @ V)[0].matrix == hermite_form(Q)[0].matrix


@pytest.mark.parametrize("m,n", [(1, 2), (2, 1), (2, 2), (3, 1)])
def test_enumerated_hermite_forms_are_fixed_points(gf2, m, n):
    """Every enumerated form is its own Hermite form and forms are distinct"""
    space = HermiteFormSpace(gf2, m, n)
    assert space.size() == hermite_count(2, n, m)
    seen = set()
    for index in range(space.size()):
        form = space.unrank(index)
        assert form.check_invariants()
        assert hermite_form(form.matrix)[0].matrix == form.matrix
        seen.add(form.matrix)
    assert len(seen) == space.size()


def test_hermite_of_singular(gf2, pm):
    M = pm(gf2, [[[0, 1], [0, 1]], [[1], [1]]])
    with pytest.raises(SingularMatrixError):
        hermite_form(M)
    with pytest.raises(DimensionMismatchError):
        hermite_form(PolyMatrix.zeros(gf2, 2, 3))


def test_kronecker_hermite_properties(gf3, random_nonsingular):
    for _ in range(10):
        Q = random_nonsingular(gf3, 3)
        form, U = kronecker_hermite_form(Q)
        assert form.check_invariants()
        assert Q @ U == form.matrix
        assert is_unimodular(U)
        assert sum(form.column_degrees) == Q.det().degree
        assert form.matrix.is_column_proper()


def test_kronecker_hermite_unique_under_unimodular_action(gf3, random_nonsingular, rng):
    for _ in range(10):
        Q = random_nonsingular(gf3, 3)
        V = elementary_unimodular(gf3, 3, rng)
        first, _ = kronecker_hermite_form(Q)
        second, _ = kronecker_hermite_form(Q @ V)
        assert first.matrix == second.matrix
        again, _ = kronecker_hermite_form(first.matrix)
        assert again.matrix == first.matrix


def test_kronecker_hermite_of_hermite_form(gf3):
    """Reducing the Hermite form gives the same Kronecker-Hermite form as reducing Q"""
    rng = np.random.default_rng(2017)
    checked = 0
    while checked < 200:
        Q = PolyMatrix.from_rows(
            gf3, [[random_below_degree(gf3, 3, rng) for _ in range(2)] for _ in range(2)]
        )
        det = Q.det()
        if det.is_zero or det.degree > 3:
            continue
        hermite, _ = hermite_form(Q)
        direct, _ = kronecker_hermite_form(Q)
        via_hermite, _ = kronecker_hermite_form(hermite.matrix)
        assert via_hermite.matrix == direct.matrix
        checked += 1


def test_kronecker_hermite_of_singular(gf2, pm):
    with pytest.raises(SingularMatrixError):
        kronecker_hermite_form(pm(gf2, [[[0, 1], [0, 1]], [[1], [1]]]))


def test_column_echelon(gf3, pm):
    M = pm(gf3, [[[0, 1], [1], [1, 1]], [[1], [0, 1], [2]]])
    E, U = column_echelon(M)
    assert M @ U == E
    assert all(e.is_zero for e in E.column(2))
    assert E[0, 1].is_zero


def test_gcrd_scalar(gf2, pm):
    """gcrd(z, z^2) = z"""
    A = pm(gf2, [[[0, 1]]])
    B = pm(gf2, [[[0, 0, 1]]])
    R, W = gcrd(A, B)
    assert R == A
    assert W @ PolyMatrix.vstack(A, B) == PolyMatrix.vstack(R, PolyMatrix.zeros(gf2, 1, 1))
    assert is_unimodular(W)


def test_gcrd_recovers_common_factor(gf3, random_nonsingular, random_pm):
    """A common right factor of A and B right-divides their gcrd"""
    for _ in range(5):
        R0 = random_nonsingular(gf3, 2)
        A = random_nonsingular(gf3, 2) @ R0
        B = random_pm(gf3, 1, 2) @ R0
        R, W = gcrd(A, B)
        stacked = W @ PolyMatrix.vstack(A, B)
        assert stacked == PolyMatrix.vstack(R, PolyMatrix.zeros(gf3, 1, 2))
        assert exact_right_divide(A, R) @ R == A
        assert exact_right_divide(R, R0) @ R0 == R


def test_exact_division_failure(gf2, pm):
    with pytest.raises(NonExactDivisionError):
        exact_right_divide(pm(gf2, [[[1, 1]]]), pm(gf2, [[[0, 1]]]))


def test_exact_division_by_singular(gf2, pm):
    with pytest.raises(SingularMatrixError):
        exact_right_divide(pm(gf2, [[[1], [1]]]), pm(gf2, [[[1], [1]], [[1], [1]]]))
