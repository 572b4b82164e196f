"""
Primeness and coprimeness tests for polynomial matrices
"""
from typing import Optional, Sequence, Tuple

from loguru import logger

from polycensus.core.config import settings
from polycensus.core.exceptions import (
    DimensionMismatchError,
    FieldError,
    InternalConsistencyError,
    SingularMatrixError,
)
from polycensus.models.field import FieldElem, elements, extension_eval, field_make
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.polynomial import Poly, poly_gcd


def is_unimodular(q: PolyMatrix) -> bool:
    """Square with a nonzero constant determinant"""
    if not q.is_square:
        raise DimensionMismatchError(f"Unimodularity needs a square matrix, got {q.shape}")
    return q.det().degree == 0


def maximal_minor_gcd(m: PolyMatrix) -> Poly:
    """Monic gcd of all maximal minors; zero when the matrix is rank deficient"""
    k = min(m.rows, m.cols)
    if k == 0:
        return Poly.one(m.field)
    result = None
    for minor in m.iter_minors(k):
        if minor.is_zero:
            continue
        result = minor.monic() if result is None else poly_gcd(result, minor)
        if result.degree == 0:
            return result
    return result if result is not None else Poly.zero(m.field)


def is_left_prime(m: PolyMatrix) -> bool:
    """Full row rank at every point of the algebraic closure"""
    if m.rows > m.cols:
        raise DimensionMismatchError(f"Left primeness needs rows <= cols, got {m.shape}")
    return maximal_minor_gcd(m).is_one


def is_right_prime(m: PolyMatrix) -> bool:
    if m.cols > m.rows:
        raise DimensionMismatchError(f"Right primeness needs cols <= rows, got {m.shape}")
    return maximal_minor_gcd(m).is_one


def are_left_coprime(*blocks: PolyMatrix) -> bool:
    """Left primeness of the horizontal concatenation"""
    if any(b.rows != blocks[0].rows for b in blocks):
        raise DimensionMismatchError("Left coprimeness needs a common row count")
    return is_left_prime(PolyMatrix.hstack(*blocks))


def are_right_coprime(*blocks: PolyMatrix) -> bool:
    if any(b.cols != blocks[0].cols for b in blocks):
        raise DimensionMismatchError("Right coprimeness needs a common column count")
    return is_right_prime(PolyMatrix.vstack(*blocks))


def block_bidiagonal(blocks: Sequence[PolyMatrix]) -> PolyMatrix:
    """
    The (N-1)m x Nm matrix with D_i and D_{i+1} side by side in block row i

        [D1 D2  0 ...  0]
        [ 0 D2 D3 ...  0]
        [ 0  0 ... D_{N-1} D_N]
    """
    count = len(blocks)
    if count < 2:
        raise DimensionMismatchError("The block criterion needs at least two matrices")
    m = blocks[0].rows
    if any(b.shape != (m, m) for b in blocks):
        raise DimensionMismatchError("All blocks must be square of the same size")
    field = blocks[0].field
    zero = PolyMatrix.zeros(field, m, m)
    block_rows = []
    for i in range(count - 1):
        row = [zero] * count
        row[i] = blocks[i]
        row[i + 1] = blocks[i + 1]
        block_rows.append(PolyMatrix.hstack(*row))
    return PolyMatrix.vstack(*block_rows)


def mutually_left_coprime(*blocks: PolyMatrix) -> bool:
    """Left primeness of the block bidiagonal matrix"""
    matrix = block_bidiagonal(blocks)
    for i, b in enumerate(blocks):
        if b.det().is_zero:
            raise SingularMatrixError(f"D_{i + 1} is singular")
    return is_left_prime(matrix)


def pairwise_left_coprime(*blocks: PolyMatrix) -> bool:
    count = len(blocks)
    return all(
        are_left_coprime(blocks[i], blocks[j])
        for i in range(count)
        for j in range(i + 1, count)
    )


def rank_drop_witness(m: PolyMatrix) -> Optional[Tuple[int, FieldElem]]:
    """
    Extension degree k and point of GF(p^k) where M loses full rank

    Searches the roots of the maximal-minor gcd by exhaustive evaluation
    in GF(p^k), k = 1..deg g. Returns None for a full-rank-everywhere matrix.
    """
    field = m.field
    if not field.is_prime_field:
        raise FieldError("Root search is supported over prime base fields only")
    g = maximal_minor_gcd(m)
    if g.is_zero:
        return 1, field.zero
    if g.degree == 0:
        return None
    p = field.characteristic
    for k in range(1, g.degree + 1):
        if p ** k > settings.ORACLE_MAX_EXTENSION_SIZE:
            raise FieldError(
                f"Root search in GF({p}^{k}) exceeds ORACLE_MAX_EXTENSION_SIZE={settings.ORACLE_MAX_EXTENSION_SIZE}"
            )
        ext = field_make(p, k)
        for point in elements(ext):
            if extension_eval(g, point).is_zero:
                logger.debug(f"Rank drop of {m.shape} matrix at {point!r} in {ext!r}")
                return k, point
    raise InternalConsistencyError(f"No root of {g} found in extensions up to degree {g.degree}")


def left_prime_oracle(m: PolyMatrix) -> bool:
    """Left primeness decided by an explicit root search"""
    if m.rows > m.cols:
        raise DimensionMismatchError(f"Left primeness needs rows <= cols, got {m.shape}")
    return rank_drop_witness(m) is None
