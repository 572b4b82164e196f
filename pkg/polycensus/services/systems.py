"""
State-space services - Kalman tests, coprime fractions, parallel connection
"""
from typing import Sequence, Tuple

from loguru import logger

from polycensus.core.exceptions import (
    DimensionMismatchError,
    InternalConsistencyError,
    SingularMatrixError,
)
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.polynomial import Poly
from polycensus.models.system import MatrixFraction, StateSpace
from polycensus.services.canonical_forms import (
    HermiteForm,
    exact_right_divide,
    gcrd,
    hermite_form,
    kronecker_hermite_form,
)
from polycensus.services.primeness import are_right_coprime, mutually_left_coprime


# ===== Kalman rank tests =====

def kalman_matrix(A: FieldMatrix, B: FieldMatrix) -> FieldMatrix:
    """[B, AB, ..., A^(n-1) B]"""
    if A.rows != A.cols or B.rows != A.rows:
        raise DimensionMismatchError(f"Inconsistent shapes A {A.shape}, B {B.shape}")
    blocks = [B]
    for _ in range(1, A.rows):
        blocks.append(A @ blocks[-1])
    return FieldMatrix.hstack(*blocks)


def is_reachable(A: FieldMatrix, B: FieldMatrix) -> bool:
    n = A.rows
    if n == 0:
        return True
    return kalman_matrix(A, B).rank() == n


def is_observable(A: FieldMatrix, C: FieldMatrix) -> bool:
    """Dual of reachability"""
    if C.cols != A.rows:
        raise DimensionMismatchError(f"Inconsistent shapes A {A.shape}, C {C.shape}")
    if A.rows == 0:
        return True
    if C.rows == 0:
        return False
    return is_reachable(A.T, C.T)


def is_minimal(system: StateSpace) -> bool:
    return is_reachable(system.A, system.B) and is_observable(system.A, system.C)


def conjugate(system: StateSpace, T: FieldMatrix) -> StateSpace:
    """(T A T^-1, T B, C T^-1, D)"""
    if T.shape != (system.n, system.n):
        raise DimensionMismatchError(f"T must be {system.n}x{system.n}, got {T.shape}")
    T_inv = T.inverse()
    return StateSpace(T @ system.A @ T_inv, T @ system.B, system.C @ T_inv, system.D)


# ===== Transfer functions =====

def resolvent_pencil(A: FieldMatrix) -> PolyMatrix:
    """zI - A"""
    field = A.field
    n = A.rows
    z = Poly.z(field)
    entries = []
    for i in range(n):
        for j in range(n):
            entry = -Poly(field, (A[i, j],))
            entries.append(entry + z if i == j else entry)
    return PolyMatrix(field, n, n, tuple(entries))


def transfer_numerator(system: StateSpace) -> Tuple[Poly, PolyMatrix]:
    """
    (d, N) with C (zI - A)^-1 B + D = N / d

    Formula:
    - d = det(zI - A)
    - N = C adj(zI - A) B + d D
    """
    pencil = resolvent_pencil(system.A)
    d = pencil.det()
    C = system.C.to_poly_matrix()
    B = system.B.to_poly_matrix()
    N = C @ pencil.adjugate() @ B + system.D.to_poly_matrix().scale(d)
    return d, N


def right_coprime_factorization(system: StateSpace) -> MatrixFraction:
    """
    Right coprime fraction P Q^-1 of the transfer function, Q in Kronecker-Hermite form

    Peels R = gcrd(dI, N) off the common-denominator fraction N (dI)^-1 and
    normalises the denominator. Works for non-minimal systems; deg det Q is
    the McMillan degree.
    """
    field = system.field
    m = system.m
    d, N = transfer_numerator(system)
    dI = PolyMatrix.scalar(field, m, d)
    R, _ = gcrd(dI, N)
    P0 = exact_right_divide(N, R)
    Q0 = exact_right_divide(dI, R)
    kh, U = kronecker_hermite_form(Q0)
    P = P0 @ U
    Q = kh.matrix

    # N Q = d P reproduces the transfer function
    if N @ Q != P.scale(d):
        raise InternalConsistencyError("Coprime fraction does not reproduce the transfer function")
    if not are_right_coprime(Q, P):
        raise InternalConsistencyError("Extracted fraction is not right coprime")
    fraction = MatrixFraction(P, kh)
    logger.debug(f"Coprime fraction of a {system.n}-state system, McMillan degree {fraction.mcmillan_degree}")
    return fraction


def mcmillan_degree(system: StateSpace) -> int:
    return right_coprime_factorization(system).mcmillan_degree


def input_state_fraction(A: FieldMatrix, B: FieldMatrix) -> MatrixFraction:
    """Right coprime fraction X U^-1 of (zI - A)^-1 B"""
    return right_coprime_factorization(StateSpace.from_pair(A, B))


def denominator_in_hermite_form(A: FieldMatrix, B: FieldMatrix) -> HermiteForm:
    """Hermite-form denominator of (zI - A)^-1 B; I_m when n = 0"""
    fraction = input_state_fraction(A, B)
    form, _ = hermite_form(fraction.denominator)
    return form


# ===== Parallel connection =====

def _check_inputs(systems: Sequence[Tuple[FieldMatrix, FieldMatrix]]) -> int:
    if not systems:
        raise DimensionMismatchError("A parallel connection needs at least one system")
    m = systems[0][1].cols
    for i, (A, B) in enumerate(systems):
        if B.cols != m:
            raise DimensionMismatchError(f"System {i + 1} has {B.cols} inputs, expected {m}")
        if A.rows != A.cols or B.rows != A.rows:
            raise DimensionMismatchError(f"System {i + 1} has inconsistent shapes {A.shape}, {B.shape}")
    return m


def parallel_connect(systems: Sequence[Tuple[FieldMatrix, FieldMatrix]]) -> StateSpace:
    """Block-diagonal A, stacked B, full state output"""
    _check_inputs(systems)
    A = FieldMatrix.block_diag(*[a for a, _ in systems])
    B = FieldMatrix.vstack(*[b for _, b in systems])
    return StateSpace.from_pair(A, B)


def parallel_reachable_via_criterion(systems: Sequence[Tuple[FieldMatrix, FieldMatrix]]) -> bool:
    """Every node reachable and the Hermite denominators mutually left coprime"""
    _check_inputs(systems)
    if not all(is_reachable(A, B) for A, B in systems):
        return False
    if len(systems) == 1:
        return True
    denominators = [denominator_in_hermite_form(A, B).matrix for A, B in systems]
    try:
        return mutually_left_coprime(*denominators)
    except SingularMatrixError as e:
        raise InternalConsistencyError(f"Denominator of (zI - A)^-1 B is singular: {e}") from e
