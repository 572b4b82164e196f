"""
Scalar polynomial services - resultants, irreducibility, enumeration
"""
from functools import lru_cache
from itertools import product
from typing import TYPE_CHECKING, Iterator, List

from loguru import logger

from polycensus.core.exceptions import FieldError, ZeroPolynomialError
from polycensus.models.field import FieldElem, FieldSpec
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polynomial import Poly

if TYPE_CHECKING:
    from numpy.random import Generator


def sylvester_matrix(p: Poly, q: Poly) -> FieldMatrix:
    """
    Sylvester matrix of p (degree m) and q (degree n), size m + n

    Column k < n holds the coefficients p_0..p_m shifted down by k rows;
    column n + k holds q_0..q_n shifted down by k rows.
    """
    p._check(q)
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("Sylvester matrix of a zero polynomial")
    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        raise ZeroPolynomialError("Sylvester matrix of two constants is empty")
    data = [0] * (size * size)
    for k in range(n):
        for i, c in enumerate(p.coeffs):
            data[(i + k) * size + k] = c
    for k in range(m):
        for i, c in enumerate(q.coeffs):
            data[(i + k) * size + n + k] = c
    return FieldMatrix(p.field, size, size, tuple(data))


def resultant(p: Poly, q: Poly) -> FieldElem:
    return sylvester_matrix(p, q).det()


def enumerate_monic(spec: FieldSpec, degree: int) -> Iterator[Poly]:
    """Monic polynomials of one degree, lower coefficients in code order"""
    if degree < 0:
        raise ValueError(f"Negative degree {degree}")
    for low in product(range(spec.size), repeat=degree):
        yield Poly(spec, tuple(reversed(low)) + (1,))


def enumerate_below_degree(spec: FieldSpec, bound: int) -> Iterator[Poly]:
    """All polynomials of degree < bound, zero included (q^bound of them)"""
    for coeffs in product(range(spec.size), repeat=max(bound, 0)):
        yield Poly(spec, tuple(reversed(coeffs)))


def monic_from_index(spec: FieldSpec, degree: int, index: int) -> Poly:
    """The index-th monic polynomial of a degree, low coefficients as base-q digits"""
    q = spec.size
    coeffs = []
    for _ in range(degree):
        index, r = divmod(index, q)
        coeffs.append(r)
    return Poly(spec, tuple(coeffs) + (1,))


def below_degree_from_index(spec: FieldSpec, bound: int, index: int) -> Poly:
    q = spec.size
    coeffs = []
    for _ in range(bound):
        index, r = divmod(index, q)
        coeffs.append(r)
    return Poly(spec, tuple(coeffs))


def is_irreducible(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2"""
    if f.degree < 1:
        raise ZeroPolynomialError(f"Irreducibility of the constant {f} is undefined")
    if f.degree == 1:
        return True
    for d in range(1, f.degree // 2 + 1):
        for g in enumerate_monic(f.field, d):
            if (f % g).is_zero:
                return False
    return True


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def count_monic_irreducibles(spec: FieldSpec, j: int) -> int:
    """Number of monic irreducibles of degree j: (1/j) sum_{d | j} mu(d) q^(j/d)"""
    if j < 1:
        raise FieldError(f"Degree must be >= 1, got {j}")
    q = spec.size
    total = sum(mobius(d) * q ** (j // d) for d in range(1, j + 1) if j % d == 0)
    return total // j


def enumerate_monic_irreducibles(spec: FieldSpec, j: int) -> List[Poly]:
    if j < 1:
        raise FieldError(f"Degree must be >= 1, got {j}")
    found = [f for f in enumerate_monic(spec, j) if is_irreducible(f)]
    logger.debug(f"{len(found)} monic irreducibles of degree {j} over {spec!r}")
    return found


def random_monic(spec: FieldSpec, degree: int, rng: "Generator") -> Poly:
    """Uniform sample among the q^degree monic polynomials of a degree"""
    if degree < 0:
        raise ValueError(f"Negative degree {degree}")
    if degree == 0:
        return Poly.one(spec)
    low = rng.integers(0, spec.size, size=degree)
    return Poly(spec, tuple(int(c) for c in low) + (1,))


def random_below_degree(spec: FieldSpec, bound: int, rng: "Generator") -> Poly:
    if bound <= 0:
        return Poly.zero(spec)
    coeffs = rng.integers(0, spec.size, size=bound)
    return Poly(spec, tuple(int(c) for c in coeffs))
