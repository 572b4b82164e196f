"""
Tests for state-space systems: Kalman tests, coprime fractions, parallel connection
"""
import numpy as np
import pytest

from polycensus.core.exceptions import DimensionMismatchError
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.polynomial import Poly
from polycensus.models.system import StateSpace
from polycensus.services.systems import (
    conjugate,
    denominator_in_hermite_form,
    is_minimal,
    is_observable,
    is_reachable,
    kalman_matrix,
    mcmillan_degree,
    parallel_connect,
    parallel_reachable_via_criterion,
    right_coprime_factorization,
)


def random_system(field, n, m, p, rng):
    return StateSpace(
        FieldMatrix.random(field, n, n, rng),
        FieldMatrix.random(field, n, m, rng),
        FieldMatrix.random(field, p, n, rng),
        FieldMatrix.random(field, p, m, rng),
    )


def random_invertible(field, n, rng):
    while True:
        T = FieldMatrix.random(field, n, n, rng)
        if T.is_invertible():
            return T


def test_reachability_examples(gf2, fm):
    A = fm(gf2, [[0, 1], [0, 0]])
    assert is_reachable(A, fm(gf2, [[0], [1]]))
    assert not is_reachable(A, fm(gf2, [[1], [0]]))
    assert kalman_matrix(A, fm(gf2, [[0], [1]])) == fm(gf2, [[0, 1], [1, 0]])


def test_observability_is_dual(gf3, rng):
    for _ in range(20):
        A = FieldMatrix.random(gf3, 2, 2, rng)
        C = FieldMatrix.random(gf3, 1, 2, rng)
        assert is_observable(A, C) == is_reachable(A.T, C.T)


def test_zero_state_system(gf2):
    A = FieldMatrix.zeros(gf2, 0, 0)
    B = FieldMatrix.zeros(gf2, 0, 1)
    assert is_reachable(A, B)
    system = StateSpace(A, B, FieldMatrix.zeros(gf2, 1, 0), FieldMatrix.identity(gf2, 1))
    assert mcmillan_degree(system) == 0


def test_shape_validation(gf2, fm):
    with pytest.raises(DimensionMismatchError):
        StateSpace.from_pair(fm(gf2, [[0, 1], [0, 0]]), fm(gf2, [[1]]))
    with pytest.raises(DimensionMismatchError):
        StateSpace.from_pair(fm(gf2, [[0]]), FieldMatrix.zeros(gf2, 1, 0))


def test_integrator_fraction(gf2, fm):
    """x+ = u, y = x has transfer function 1/z"""
    system = StateSpace(fm(gf2, [[0]]), fm(gf2, [[1]]), fm(gf2, [[1]]), fm(gf2, [[0]]))
    fraction = right_coprime_factorization(system)
    assert fraction.P == PolyMatrix.identity(gf2, 1)
    assert fraction.denominator == PolyMatrix.from_rows(gf2, [[Poly.z(gf2)]])
    assert fraction.mcmillan_degree == 1
    assert fraction.degrees_bounded()


def test_unobservable_integrator(gf2, fm):
    system = StateSpace(fm(gf2, [[0]]), fm(gf2, [[1]]), fm(gf2, [[0]]), fm(gf2, [[0]]))
    assert mcmillan_degree(system) == 0
    assert not is_minimal(system)


def test_minimal_iff_full_mcmillan_degree(gf2, rng):
    """A realisation is minimal exactly when its McMillan degree is n"""
    for _ in range(40):
        system = random_system(gf2, 2, 1, 1, rng)
        fraction = right_coprime_factorization(system)
        assert is_minimal(system) == (fraction.mcmillan_degree == 2)
        assert fraction.degrees_bounded()


def test_mcmillan_degree_invariant_under_conjugation(gf3, rng):
    for _ in range(10):
        system = random_system(gf3, 2, 2, 1, rng)
        T = random_invertible(gf3, 2, rng)
        assert mcmillan_degree(conjugate(system, T)) == mcmillan_degree(system)
        assert right_coprime_factorization(conjugate(system, T)).P == right_coprime_factorization(system).P


def test_hermite_denominator_degree(gf2, rng):
    """deg det of the denominator is n for a reachable pair"""
    for _ in range(20):
        A = FieldMatrix.random(gf2, 2, 2, rng)
        B = FieldMatrix.random(gf2, 2, 1, rng)
        if not is_reachable(A, B):
            continue
        form = denominator_in_hermite_form(A, B)
        assert sum(form.row_degrees) == 2
        assert form.check_invariants()


def test_parallel_connect_shapes(gf2, fm):
    system = parallel_connect([
        (fm(gf2, [[0]]), fm(gf2, [[1]])),
        (fm(gf2, [[1, 0], [0, 1]]), fm(gf2, [[1], [0]])),
    ])
    assert system.A.shape == (3, 3)
    assert system.B.shape == (3, 1)
    with pytest.raises(DimensionMismatchError):
        parallel_connect([(fm(gf2, [[0]]), fm(gf2, [[1]])), (fm(gf2, [[0]]), fm(gf2, [[1, 1]]))])


@pytest.mark.parametrize("m,degrees", [(1, (1, 1)), (1, (1, 2, 1)), (2, (1, 2)), (2, (2, 1, 1))])
def test_parallel_criterion_matches_kalman(gf2, rng, m, degrees):
    """Reachability of the connection equals node reachability plus mutual coprimeness"""
    for _ in range(25):
        nodes = [
            (FieldMatrix.random(gf2, n, n, rng), FieldMatrix.random(gf2, n, m, rng))
            for n in degrees
        ]
        connected = parallel_connect(nodes)
        assert parallel_reachable_via_criterion(nodes) == is_reachable(connected.A, connected.B)


def test_parallel_criterion_over_gf3(gf3, rng):
    for _ in range(25):
        nodes = [(FieldMatrix.random(gf3, 1, 1, rng), FieldMatrix.random(gf3, 1, 1, rng)) for _ in range(3)]
        connected = parallel_connect(nodes)
        assert parallel_reachable_via_criterion(nodes) == is_reachable(connected.A, connected.B)


def test_parallel_criterion_random_connections_over_gf3(gf3):
    """Random shapes: two or three nodes, state sizes 1-2, one or two inputs"""
    rng = np.random.default_rng(2017)
    disagreements = []
    for _ in range(1000):
        count = int(rng.integers(2, 4))
        m = int(rng.integers(1, 3))
        degrees = [int(rng.integers(1, 3)) for _ in range(count)]
        nodes = [
            (FieldMatrix.random(gf3, n, n, rng), FieldMatrix.random(gf3, n, m, rng))
            for n in degrees
        ]
        connected = parallel_connect(nodes)
        if parallel_reachable_via_criterion(nodes) != is_reachable(connected.A, connected.B):
            disagreements.append(nodes)
    assert disagreements == []
