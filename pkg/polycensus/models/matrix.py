"""
Scalar matrix model over a finite field
"""
from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING, Iterator, List, Sequence, Tuple

from polycensus.core.exceptions import (
    DimensionMismatchError,
    FieldMismatchError,
    SingularMatrixError,
)
from polycensus.models.field import FieldElem, FieldSpec

if TYPE_CHECKING:
    from numpy.random import Generator
    from polycensus.models.polymatrix import PolyMatrix


@dataclass(frozen=True)
class FieldMatrix:
    """Immutable rows x cols matrix of element codes, row-major"""

    field: FieldSpec
    rows: int
    cols: int
    data: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"Negative shape {self.rows}x{self.cols}")
        if len(self.data) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.data)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    # ===== Constructors =====

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int = None) -> "FieldMatrix":
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != n_cols for r in rows):
            raise DimensionMismatchError("Ragged rows in matrix literal")
        if cols is not None and n_cols != cols:
            raise DimensionMismatchError(f"Expected {cols} columns, got {n_cols}")
        data = tuple(field.code_of(v) for r in rows for v in r)
        return cls(field, len(rows), n_cols, data)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FieldMatrix":
        return cls(field, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def random(cls, field: FieldSpec, rows: int, cols: int, rng: "Generator") -> "FieldMatrix":
        if rows * cols == 0:
            return cls.zeros(field, rows, cols)
        codes = rng.integers(0, field.size, size=rows * cols)
        return cls(field, rows, cols, tuple(int(c) for c in codes))

    @classmethod
    def unrank(cls, field: FieldSpec, rows: int, cols: int, index: int) -> "FieldMatrix":
        """The index-th matrix of a shape, entries read as base-q digits"""
        q = field.size
        data = []
        for _ in range(rows * cols):
            index, r = divmod(index, q)
            data.append(r)
        return cls(field, rows, cols, tuple(data))

    @classmethod
    def all_matrices(cls, field: FieldSpec, rows: int, cols: int) -> Iterator["FieldMatrix"]:
        """Every matrix of the shape, in a deterministic order"""
        for data in product(range(field.size), repeat=rows * cols):
            yield cls(field, rows, cols, data)

    @staticmethod
    def space_size(field: FieldSpec, rows: int, cols: int) -> int:
        return field.size ** (rows * cols)

    # ===== Access =====

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.data[i * self.cols + j]

    def element(self, i: int, j: int) -> FieldElem:
        return FieldElem(self.field, self[i, j])

    def row(self, i: int) -> Tuple[int, ...]:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_literal(self) -> list:
        if self.field.degree == 1:
            return self.to_rows()
        return [[list(self.field.digits(c)) for c in r] for r in self.to_rows()]

    @property
    def T(self) -> "FieldMatrix":
        return FieldMatrix(
            self.field, self.cols, self.rows,
            tuple(self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return not any(self.data)

    # ===== Arithmetic =====

    def _check_field(self, other: "FieldMatrix"):
        if other.field != self.field:
            raise FieldMismatchError(f"Matrices over {self.field!r} and {other.field!r}")

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        f = self.field
        return FieldMatrix(f, self.rows, self.cols, tuple(f.add(a, b) for a, b in zip(self.data, other.data)))

    def __neg__(self) -> "FieldMatrix":
        f = self.field
        return FieldMatrix(f, self.rows, self.cols, tuple(f.neg(a) for a in self.data))

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        return self + (-other)

    def scale(self, code: int) -> "FieldMatrix":
        f = self.field
        return FieldMatrix(f, self.rows, self.cols, tuple(f.mul(a, code) for a in self.data))

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        f = self.field
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.data, other.data
        out = []
        if f.degree == 1:
            p = f.characteristic
            for i in range(n):
                for j in range(m):
                    s = 0
                    for t in range(k):
                        s += a[i * k + t] * b[t * m + j]
                    out.append(s % p)
        else:
            for i in range(n):
                for j in range(m):
                    s = 0
                    for t in range(k):
                        s = f.add(s, f.mul(a[i * k + t], b[t * m + j]))
                    out.append(s)
        return FieldMatrix(f, n, m, tuple(out))

    def power(self, k: int) -> "FieldMatrix":
        if not self.is_square:
            raise DimensionMismatchError("Only square matrices have powers")
        result = FieldMatrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # ===== Stacking =====

    @staticmethod
    def hstack(*blocks: "FieldMatrix") -> "FieldMatrix":
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionMismatchError("hstack needs equal row counts")
        data = []
        for i in range(rows):
            for b in blocks:
                data.extend(b.row(i))
        return FieldMatrix(blocks[0].field, rows, sum(b.cols for b in blocks), tuple(data))

    @staticmethod
    def vstack(*blocks: "FieldMatrix") -> "FieldMatrix":
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionMismatchError("vstack needs equal column counts")
        data = []
        for b in blocks:
            data.extend(b.data)
        return FieldMatrix(blocks[0].field, sum(b.rows for b in blocks), cols, tuple(data))

    @staticmethod
    def block_diag(*blocks: "FieldMatrix") -> "FieldMatrix":
        field = blocks[0].field
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [0] * (rows * cols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[(r0 + i) * cols + c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return FieldMatrix(field, rows, cols, tuple(data))

    # ===== Gaussian elimination =====

    def row_echelon(self) -> Tuple[List[List[int]], List[int], int]:
        """
        Reduced row echelon form

        Returns:
            (rows of the echelon form, pivot columns, sign of the row permutation)
        """
        f = self.field
        work = self.to_rows()
        pivots: List[int] = []
        sign = 1
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pivot = next((i for i in range(r, self.rows) if work[i][c]), None)
            if pivot is None:
                continue
            if pivot != r:
                work[r], work[pivot] = work[pivot], work[r]
                sign = -sign
            inv = f.inv(work[r][c])
            work[r] = [f.mul(x, inv) for x in work[r]]
            for i in range(self.rows):
                if i != r and work[i][c]:
                    factor = work[i][c]
                    work[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
        return work, pivots, sign

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return len(self.row_echelon()[1])

    def det(self) -> FieldElem:
        if not self.is_square:
            raise DimensionMismatchError(f"det of non-square {self.shape} matrix")
        f = self.field
        n = self.rows
        work = self.to_rows()
        result = 1
        for c in range(n):
            pivot = next((i for i in range(c, n) if work[i][c]), None)
            if pivot is None:
                return f.zero
            if pivot != c:
                work[c], work[pivot] = work[pivot], work[c]
                result = f.neg(result)
            lead = work[c][c]
            result = f.mul(result, lead)
            inv = f.inv(lead)
            for i in range(c + 1, n):
                if work[i][c]:
                    factor = f.mul(work[i][c], inv)
                    work[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(work[i], work[c])]
        return FieldElem(f, result)

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def inverse(self) -> "FieldMatrix":
        if not self.is_square:
            raise DimensionMismatchError("Only square matrices are invertible")
        n = self.rows
        augmented = FieldMatrix.hstack(self, FieldMatrix.identity(self.field, n))
        work, pivots, _ = augmented.row_echelon()
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise SingularMatrixError("Matrix is not invertible")
        return FieldMatrix(self.field, n, n, tuple(x for r in work for x in r[n:]))

    # ===== Conversion =====

    def to_poly_matrix(self) -> "PolyMatrix":
        from polycensus.models.polymatrix import PolyMatrix
        from polycensus.models.polynomial import Poly

        return PolyMatrix(
            self.field, self.rows, self.cols,
            tuple(Poly(self.field, (c,)) for c in self.data),
        )

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(repr(FieldElem(self.field, c)) for c in r) + "]" for r in self.to_rows())
