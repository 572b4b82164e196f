"""
Shared fixtures
"""
import numpy as np
import pytest

from polycensus.models.field import field_make
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix
from polycensus.services.polynomials import random_below_degree


@pytest.fixture
def gf2():
    return field_make(2)


@pytest.fixture
def gf3():
    return field_make(3)


@pytest.fixture
def gf4():
    return field_make(2, 2)


@pytest.fixture
def gf5():
    return field_make(5)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def pm():
    """Polynomial matrix from a coefficient-list literal"""
    def build(field, literal):
        return PolyMatrix.from_literal(field, literal)
    return build


@pytest.fixture
def fm():
    """Scalar matrix from a list of rows"""
    def build(field, rows, cols=None):
        return FieldMatrix.from_rows(field, rows, cols=cols)
    return build


@pytest.fixture
def random_pm(rng):
    """Random polynomial matrix with entries of degree below bound"""
    def build(field, rows, cols, bound=2):
        return PolyMatrix.from_rows(
            field, [[random_below_degree(field, bound, rng) for _ in range(cols)] for _ in range(rows)]
        )
    return build


@pytest.fixture
def random_nonsingular(random_pm):
    def build(field, size, bound=2):
        while True:
            M = random_pm(field, size, size, bound)
            if not M.det().is_zero:
                return M
    return build
