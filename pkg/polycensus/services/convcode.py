"""
Convolutional code services
"""
from loguru import logger

from polycensus.core.exceptions import RankDeficientError, SingularMatrixError
from polycensus.models.code import ConvCode
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.system import StateSpace
from polycensus.services.canonical_forms import kronecker_hermite_form
from polycensus.services.primeness import is_right_prime
from polycensus.services.systems import conjugate, input_state_fraction, is_reachable


def code_degree(generator: PolyMatrix) -> int:
    return ConvCode(generator).degree


def code_order(generator: PolyMatrix) -> int:
    return ConvCode(generator).order


def is_minimal_basis(generator: PolyMatrix) -> bool:
    """Column properness, equivalently order == degree"""
    ConvCode(generator)
    return generator.is_column_proper()


def is_noncatastrophic(generator: PolyMatrix) -> bool:
    ConvCode(generator)
    return is_right_prime(generator)


def code_from_system(system: StateSpace) -> ConvCode:
    """
    Generator [Y; U] of the code of an input/state/output representation

    With (zI - A)^-1 B = X U^-1 right coprime and U in Kronecker-Hermite
    form, Y = C X + D U, so Y U^-1 = C (zI - A)^-1 B + D.
    """
    fraction = input_state_fraction(system.A, system.B)
    X = fraction.P
    U = fraction.denominator
    Y = system.C.to_poly_matrix() @ X + system.D.to_poly_matrix() @ U
    code = ConvCode(PolyMatrix.vstack(Y, U))
    logger.debug(f"Code of rate {code.rate} and degree {code.degree} from a {system.n}-state system")
    return code


def canonical_generator(generator: PolyMatrix) -> PolyMatrix:
    """
    Generator normalised so its bottom k x k block is in Kronecker-Hermite form

    Only defined when the bottom block is nonsingular.
    """
    k = generator.cols
    bottom = generator.submatrix(range(generator.rows - k, generator.rows), range(k))
    _, U = kronecker_hermite_form(bottom)
    return generator @ U


def codes_equal(first: PolyMatrix, second: PolyMatrix) -> bool:
    """
    Compare the codes of two generators

    Uses Kronecker-Hermite normalisation of the bottom block when both are
    nonsingular, else structural equality of the given generators.
    """
    ConvCode(first)
    ConvCode(second)
    if first.shape != second.shape:
        return False
    try:
        return canonical_generator(first) == canonical_generator(second)
    except SingularMatrixError:
        return first == second


def minimal_representation_orbit_check(system: StateSpace, T: FieldMatrix) -> bool:
    """Conjugating a reachable representation by T leaves the generator unchanged"""
    if not T.is_invertible():
        raise SingularMatrixError("Conjugating matrix is not invertible")
    if not is_reachable(system.A, system.B):
        raise RankDeficientError("Orbit check needs a reachable (A, B)")
    original = code_from_system(system).generator
    moved = code_from_system(conjugate(system, T)).generator
    return original == moved
