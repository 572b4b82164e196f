"""
Polynomial matrix model
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from polycensus.core.config import settings
from polycensus.core.exceptions import (
    DimensionMismatchError,
    FieldMismatchError,
    InternalConsistencyError,
    ParseError,
)
from polycensus.models.field import FieldElem, FieldSpec
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polynomial import ZERO_DEGREE, Poly


@dataclass(frozen=True)
class PolyMatrix:
    """
    rows x cols matrix of Poly, row-major

    Zero-sized shapes are allowed (systems with no states or no outputs).
    """

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[Poly, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    # ===== Constructors =====

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Poly]], cols: Optional[int] = None) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != n_cols for r in rows):
            raise DimensionMismatchError("Ragged rows in polynomial matrix")
        entries = tuple(e for r in rows for e in r)
        for e in entries:
            if e.field != field:
                raise FieldMismatchError(f"Entry over {e.field!r} in a matrix over {field!r}")
        return cls(field, len(rows), n_cols, entries)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[Poly]], rows: int) -> "PolyMatrix":
        cols = len(columns)
        return cls(field, rows, cols, tuple(columns[j][i] for i in range(rows) for j in range(cols)))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "PolyMatrix":
        zero = Poly.zero(field)
        return cls(field, rows, cols, (zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "PolyMatrix":
        zero, one = Poly.zero(field), Poly.one(field)
        return cls(field, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def scalar(cls, field: FieldSpec, n: int, value: Poly) -> "PolyMatrix":
        zero = Poly.zero(field)
        return cls(field, n, n, tuple(value if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def from_literal(cls, field: FieldSpec, literal: Sequence[Sequence[Sequence]]) -> "PolyMatrix":
        """
        Parse a JSON array-of-arrays of coefficient lists

        [[[0,1],[1]],[[0],[1]]] is [[z, 1], [0, 1]].
        """
        if not isinstance(literal, (list, tuple)):
            raise ParseError("Matrix literal must be an array of rows")
        rows = []
        for r in literal:
            if not isinstance(r, (list, tuple)):
                raise ParseError("Matrix row must be an array of coefficient lists")
            row = []
            for entry in r:
                if isinstance(entry, int):
                    entry = [entry]
                if not isinstance(entry, (list, tuple)):
                    raise ParseError(f"Polynomial entry must be a coefficient list, got {entry!r}")
                row.append(Poly.from_coefficients(field, entry))
            rows.append(row)
        return cls.from_rows(field, rows)

    def to_literal(self) -> list:
        return [[self[i, j].to_list() for j in range(self.cols)] for i in range(self.rows)]

    # ===== Access =====

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Poly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Poly, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Poly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> List[List[Poly]]:
        return [list(self.column(j)) for j in range(self.cols)]

    @property
    def T(self) -> "PolyMatrix":
        return PolyMatrix(
            self.field, self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(
            self.field, len(rows), len(cols),
            tuple(self.entries[i * self.cols + j] for i in rows for j in cols),
        )

    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def max_degree(self) -> int:
        return max((e.degree for e in self.entries), default=ZERO_DEGREE)

    # ===== Arithmetic =====

    def _check(self, other: "PolyMatrix"):
        if other.field != self.field:
            raise FieldMismatchError(f"Matrices over {self.field!r} and {other.field!r}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        return PolyMatrix(self.field, self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.field, self.rows, self.cols, tuple(-a for a in self.entries))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, value: Poly) -> "PolyMatrix":
        return PolyMatrix(self.field, self.rows, self.cols, tuple(value * a for a in self.entries))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        zero = Poly.zero(self.field)
        out = []
        for i in range(n):
            for j in range(m):
                acc = zero
                for t in range(k):
                    x = a[i * k + t]
                    y = b[t * m + j]
                    if x.coeffs and y.coeffs:
                        acc = acc + x * y
                out.append(acc)
        return PolyMatrix(self.field, n, m, tuple(out))

    # ===== Stacking =====

    @staticmethod
    def hstack(*blocks: "PolyMatrix") -> "PolyMatrix":
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionMismatchError("hstack needs equal row counts")
        entries = []
        for i in range(rows):
            for b in blocks:
                entries.extend(b.row(i))
        return PolyMatrix(blocks[0].field, rows, sum(b.cols for b in blocks), tuple(entries))

    @staticmethod
    def vstack(*blocks: "PolyMatrix") -> "PolyMatrix":
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionMismatchError("vstack needs equal column counts")
        entries = []
        for b in blocks:
            entries.extend(b.entries)
        return PolyMatrix(blocks[0].field, sum(b.rows for b in blocks), cols, tuple(entries))

    @staticmethod
    def block_diag(*blocks: "PolyMatrix") -> "PolyMatrix":
        field = blocks[0].field
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        entries = [Poly.zero(field)] * (rows * cols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    entries[(r0 + i) * cols + c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return PolyMatrix(field, rows, cols, tuple(entries))

    # ===== Determinants and minors =====

    def det(self) -> Poly:
        """Cofactor expansion for small sizes, Bareiss elimination above"""
        if not self.is_square:
            raise DimensionMismatchError(f"det of non-square {self.shape} matrix")
        if self.rows <= settings.DET_COFACTOR_MAX_SIZE:
            return _cofactor_det(self.field, self.to_rows())
        return _bareiss_det(self.field, self.to_rows())

    def minors(self, k: int) -> List[Poly]:
        """All k x k minors, row subsets outer and column subsets inner, lexicographic"""
        if not 0 < k <= min(self.rows, self.cols):
            raise DimensionMismatchError(f"Minor size {k} out of range for {self.shape}")
        return list(self.iter_minors(k))

    def iter_minors(self, k: int) -> Iterable[Poly]:
        for rows in combinations(range(self.rows), k):
            for cols in combinations(range(self.cols), k):
                yield self.submatrix(rows, cols).det()

    def adjugate(self) -> "PolyMatrix":
        """Transposed cofactor matrix; adj(M) @ M = det(M) I"""
        if not self.is_square:
            raise DimensionMismatchError("adjugate needs a square matrix")
        n = self.rows
        if n == 0:
            return self
        if n == 1:
            return PolyMatrix.identity(self.field, 1)
        entries = []
        for i in range(n):
            for j in range(n):
                # Entry (i, j) is the (j, i) cofactor
                keep_rows = [r for r in range(n) if r != j]
                keep_cols = [c for c in range(n) if c != i]
                minor = self.submatrix(keep_rows, keep_cols).det()
                entries.append(-minor if (i + j) % 2 else minor)
        return PolyMatrix(self.field, n, n, tuple(entries))

    # ===== Column degrees =====

    def column_degrees(self) -> Tuple[int, ...]:
        """Max entry degree per column (ZERO_DEGREE for a zero column)"""
        return tuple(max((e.degree for e in self.column(j)), default=ZERO_DEGREE) for j in range(self.cols))

    def hc_matrix(self) -> FieldMatrix:
        """Coefficients of z^(column degree) in each column; zero columns stay zero"""
        degrees = self.column_degrees()
        data = []
        for i in range(self.rows):
            for j in range(self.cols):
                d = degrees[j]
                data.append(self[i, j].coefficient(d) if d >= 0 else 0)
        return FieldMatrix(self.field, self.rows, self.cols, tuple(data))

    def is_column_proper(self) -> bool:
        """Highest-column-degree coefficient matrix has full column rank"""
        if self.cols > self.rows:
            return False
        return self.hc_matrix().rank() == self.cols

    # ===== Evaluation =====

    def evaluate(self, x: FieldElem) -> FieldMatrix:
        f = self.field
        return FieldMatrix(f, self.rows, self.cols, tuple(e(x).value for e in self.entries))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.to_rows())


def _cofactor_det(field: FieldSpec, rows: List[List[Poly]]) -> Poly:
    n = len(rows)
    if n == 0:
        return Poly.one(field)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Poly.zero(field)
    for j, head in enumerate(rows[0]):
        if head.is_zero:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = head * _cofactor_det(field, sub)
        total = total - term if j % 2 else total + term
    return total


def _bareiss_det(field: FieldSpec, rows: List[List[Poly]]) -> Poly:
    n = len(rows)
    work = [list(r) for r in rows]
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        if work[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not work[i][k].is_zero), None)
            if swap is None:
                return Poly.zero(field)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[i][j] * pivot - work[i][k] * work[k][j]
                quot, rem = divmod(num, prev)
                if not rem.is_zero:
                    raise InternalConsistencyError("Bareiss step left a remainder")
                work[i][j] = quot
            work[i][k] = Poly.zero(field)
        prev = pivot
    det = work[n - 1][n - 1]
    return -det if sign < 0 else det


# ===== Module-level aliases =====

def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a @ b


def mat_det(a: PolyMatrix) -> Poly:
    return a.det()


def column_degrees(h: PolyMatrix) -> Tuple[int, ...]:
    return h.column_degrees()


def hc_matrix(h: PolyMatrix) -> FieldMatrix:
    return h.hc_matrix()


def is_column_proper(h: PolyMatrix) -> bool:
    return h.is_column_proper()


def minors(m: PolyMatrix, k: int) -> List[Poly]:
    return m.minors(k)
