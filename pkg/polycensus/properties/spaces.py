"""
Sample spaces - finite sets with ranking for enumeration and uniform sampling
"""
from abc import ABC, abstractmethod
from typing import Any, List, Sequence, Tuple

from numpy.random import Generator

from polycensus.models.field import FieldSpec
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.polynomial import Poly
from polycensus.services.canonical_forms import HermiteForm
from polycensus.services.formulas import compositions, x_kappa_count

_INT63 = 2 ** 62


def uniform_index(rng: Generator, size: int) -> int:
    """Uniform integer in [0, size), also for sizes beyond 64 bits"""
    if size <= _INT63:
        return int(rng.integers(0, size))
    bits = size.bit_length()
    while True:
        value = 0
        remaining = bits
        while remaining > 0:
            chunk = min(remaining, 32)
            value = (value << chunk) | int(rng.integers(0, 1 << chunk))
            remaining -= chunk
        if value < size:
            return value


def _digits(index: int, q: int, count: int) -> Tuple[Tuple[int, ...], int]:
    out = []
    for _ in range(count):
        index, r = divmod(index, q)
        out.append(r)
    return tuple(out), index


class SampleSpace(ABC):
    """
    Abstract finite sample space

    Every element has an index in [0, size); unrank is a bijection onto the
    space and sample draws uniformly.
    """

    @abstractmethod
    def size(self) -> int:
        pass

    @abstractmethod
    def unrank(self, index: int) -> Any:
        pass

    def sample(self, rng: Generator) -> Any:
        return self.unrank(uniform_index(rng, self.size()))


class ScalarMatrixSpace(SampleSpace):
    """All rows x cols matrices over a field"""

    def __init__(self, field: FieldSpec, rows: int, cols: int):
        self.field = field
        self.rows = rows
        self.cols = cols

    def size(self) -> int:
        return self.field.size ** (self.rows * self.cols)

    def unrank(self, index: int) -> FieldMatrix:
        return FieldMatrix.unrank(self.field, self.rows, self.cols, index)

    def sample(self, rng: Generator) -> FieldMatrix:
        return FieldMatrix.random(self.field, self.rows, self.cols, rng)


class MonicPolySpace(SampleSpace):
    """Monic polynomials of one degree"""

    def __init__(self, field: FieldSpec, degree: int):
        self.field = field
        self.degree = degree

    def size(self) -> int:
        return self.field.size ** self.degree

    def unrank(self, index: int) -> Poly:
        low, _ = _digits(index, self.field.size, self.degree)
        return Poly(self.field, low + (1,))


class PolyBelowDegreeSpace(SampleSpace):
    """Polynomials of degree below a bound, zero included"""

    def __init__(self, field: FieldSpec, bound: int):
        self.field = field
        self.bound = max(bound, 0)

    def size(self) -> int:
        return self.field.size ** self.bound

    def unrank(self, index: int) -> Poly:
        coeffs, _ = _digits(index, self.field.size, self.bound)
        return Poly(self.field, coeffs)


class HermiteFormSpace(SampleSpace):
    """
    m x m Hermite forms with determinant degree n

    The space is the disjoint union of the row-degree classes X_kappa, in
    composition order, so uniform indices weight each class by its size.
    """

    def __init__(self, field: FieldSpec, m: int, n: int):
        self.field = field
        self.m = m
        self.n = n
        q = field.size
        self.blocks: List[Tuple[Tuple[int, ...], int]] = [
            (kappa, x_kappa_count(q, m, kappa)) for kappa in compositions(n, m)
        ]
        self._size = sum(count for _, count in self.blocks)

    def size(self) -> int:
        return self._size

    def unrank(self, index: int) -> HermiteForm:
        for kappa, count in self.blocks:
            if index < count:
                return self._build(kappa, index)
            index -= count
        raise IndexError("Hermite form index out of range")

    def _build(self, kappa: Sequence[int], index: int) -> HermiteForm:
        f = self.field
        q = f.size
        m = self.m
        row_degrees = tuple(reversed(kappa))
        zero = Poly.zero(f)
        rows = [[zero] * m for _ in range(m)]
        for i in range(m):
            d = row_degrees[i]
            low, index = _digits(index, q, d)
            rows[i][i] = Poly(f, low + (1,))
            for j in range(i):
                coeffs, index = _digits(index, q, d)
                rows[i][j] = Poly(f, coeffs)
        return HermiteForm(PolyMatrix.from_rows(f, rows), row_degrees)


class ProductSpace(SampleSpace):
    """Cartesian product; the first factor varies fastest in index order"""

    def __init__(self, *factors: SampleSpace):
        self.factors = factors

    def size(self) -> int:
        total = 1
        for factor in self.factors:
            total *= factor.size()
        return total

    def unrank(self, index: int) -> tuple:
        items = []
        for factor in self.factors:
            index, local = divmod(index, factor.size())
            items.append(factor.unrank(local))
        return tuple(items)

    def sample(self, rng: Generator) -> tuple:
        return tuple(factor.sample(rng) for factor in self.factors)
