"""
Tests for convolutional codes and their input/state/output representations
"""
from fractions import Fraction

import numpy as np
import pytest

from polycensus.core.exceptions import DimensionMismatchError, RankDeficientError
from polycensus.models.code import ConvCode
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.system import StateSpace
from polycensus.services.convcode import (
    code_degree,
    code_from_system,
    code_order,
    codes_equal,
    is_minimal_basis,
    is_noncatastrophic,
    minimal_representation_orbit_check,
)
from polycensus.services.polynomials import enumerate_below_degree
from polycensus.services.systems import is_observable, is_reachable


def test_catastrophic_generator(gf2, pm):
    """[z; z^2] shares the factor z"""
    G = pm(gf2, [[[0, 1]], [[0, 0, 1]]])
    assert not is_noncatastrophic(G)
    assert code_degree(G) == 2
    assert code_order(G) == 2
    assert is_minimal_basis(G)


def test_noncatastrophic_generator(gf2, pm):
    G = pm(gf2, [[[1, 1]], [[0, 1]]])
    assert is_noncatastrophic(G)
    assert ConvCode(G).rate == Fraction(1, 2)


def test_generator_validation(gf2, pm):
    with pytest.raises(RankDeficientError):
        ConvCode(PolyMatrix.zeros(gf2, 2, 1))
    with pytest.raises(DimensionMismatchError):
        ConvCode(pm(gf2, [[[1], [0, 1]]]))


def test_order_equals_degree_exactly_for_column_proper(gf2):
    """Exhaustive over 2x1 generators with entries of degree below 3"""
    polys = list(enumerate_below_degree(gf2, 3))
    for a in polys:
        for b in polys:
            if a.is_zero and b.is_zero:
                continue
            G = PolyMatrix.from_rows(gf2, [[a], [b]])
            assert (code_order(G) == code_degree(G)) == is_minimal_basis(G)


def test_order_degree_for_rate_two_thirds(gf2, random_pm):
    for _ in range(60):
        G = random_pm(gf2, 3, 2, bound=3)
        if all(minor.is_zero for minor in G.minors(2)):
            continue
        assert (code_order(G) == code_degree(G)) == is_minimal_basis(G)
        assert code_order(G) >= code_degree(G)


def test_code_from_integrator(gf2, fm):
    """x+ = u, y = x gives the generator [1; z]"""
    system = StateSpace(fm(gf2, [[0]]), fm(gf2, [[1]]), fm(gf2, [[1]]), fm(gf2, [[0]]))
    code = code_from_system(system)
    assert code.generator == PolyMatrix.from_literal(gf2, [[[1]], [[0, 1]]])
    assert code.degree == 1
    assert is_noncatastrophic(code.generator)


def test_code_from_unobservable_system(gf2, fm):
    system = StateSpace(fm(gf2, [[0]]), fm(gf2, [[1]]), fm(gf2, [[0]]), fm(gf2, [[0]]))
    assert not is_noncatastrophic(code_from_system(system).generator)


def test_noncatastrophic_iff_observable(gf2, rng):
    """For reachable (A, B) the induced code is non-catastrophic exactly when (A, C) is observable"""
    checked = 0
    while checked < 60:
        A = FieldMatrix.random(gf2, 2, 2, rng)
        B = FieldMatrix.random(gf2, 2, 1, rng)
        if not is_reachable(A, B):
            continue
        C = FieldMatrix.random(gf2, 1, 2, rng)
        D = FieldMatrix.random(gf2, 1, 1, rng)
        G = code_from_system(StateSpace(A, B, C, D)).generator
        assert is_noncatastrophic(G) == is_observable(A, C)
        checked += 1


def test_orbit_check(gf3, rng):
    checked = 0
    while checked < 10:
        A = FieldMatrix.random(gf3, 2, 2, rng)
        B = FieldMatrix.random(gf3, 2, 1, rng)
        if not is_reachable(A, B):
            continue
        system = StateSpace(A, B, FieldMatrix.random(gf3, 1, 2, rng), FieldMatrix.random(gf3, 1, 1, rng))
        T = FieldMatrix.random(gf3, 2, 2, rng)
        if not T.is_invertible():
            continue
        assert minimal_representation_orbit_check(system, T)
        checked += 1


def test_orbit_check_needs_reachable_pair(gf2, fm):
    system = StateSpace.from_pair(fm(gf2, [[0, 1], [0, 0]]), fm(gf2, [[1], [0]]))
    with pytest.raises(RankDeficientError):
        minimal_representation_orbit_check(system, FieldMatrix.identity(gf2, 2))


def test_codes_equal_under_unimodular_change(gf2, pm):
    G = pm(gf2, [[[1, 1], [0, 1]], [[1], [1, 1]], [[0, 1], [1]]])
    V = pm(gf2, [[[1], [0, 1]], [[0], [1]]])
    assert codes_equal(G, G @ V)
    other = pm(gf2, [[[1], [0]], [[0], [1]], [[0], [0]]])
    assert not codes_equal(G, other)


def test_noncatastrophic_iff_observable_over_gf3(gf3):
    rng = np.random.default_rng(2017)
    checked = 0
    while checked < 1000:
        A = FieldMatrix.random(gf3, 2, 2, rng)
        B = FieldMatrix.random(gf3, 2, 1, rng)
        if not is_reachable(A, B):
            continue
        C = FieldMatrix.random(gf3, 1, 2, rng)
        D = FieldMatrix.random(gf3, 1, 1, rng)
        G = code_from_system(StateSpace(A, B, C, D)).generator
        assert is_noncatastrophic(G) == is_observable(A, C)
        checked += 1
