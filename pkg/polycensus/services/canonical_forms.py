"""
Canonical forms - Hermite and Kronecker-Hermite reduction, gcrd, exact division

All reductions run on one elementary column-operation engine. Row-side
reductions (gcrd) work on the transpose.
"""
from dataclasses import dataclass
from typing import List, Tuple

from loguru import logger

from polycensus.core.exceptions import (
    DimensionMismatchError,
    InternalConsistencyError,
    NonExactDivisionError,
    RankDeficientError,
    SingularMatrixError,
)
from polycensus.models.field import FieldSpec
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.polynomial import ZERO_DEGREE, Poly


class ColumnWorkspace:
    """
    Mutable column-major copy of a matrix plus the accumulated transform

    Every operation is applied to both, so that original @ transform equals
    the current working matrix at all times.
    """

    def __init__(self, matrix: PolyMatrix):
        self.field: FieldSpec = matrix.field
        self.rows = matrix.rows
        self.cols = matrix.cols
        self.columns: List[List[Poly]] = matrix.columns()
        identity = PolyMatrix.identity(self.field, self.cols)
        self.transform: List[List[Poly]] = identity.columns()

    def add_multiple(self, target: int, source: int, factor: Poly):
        """column[target] += factor * column[source]"""
        if factor.is_zero:
            return
        for data in (self.columns, self.transform):
            src = data[source]
            dst = data[target]
            for i, s in enumerate(src):
                if s.coeffs:
                    dst[i] = dst[i] + factor * s

    def swap(self, a: int, b: int):
        if a == b:
            return
        for data in (self.columns, self.transform):
            data[a], data[b] = data[b], data[a]

    def scale(self, j: int, code: int):
        for data in (self.columns, self.transform):
            data[j] = [e.scale(code) for e in data[j]]

    def column_degree(self, j: int) -> int:
        return max((e.degree for e in self.columns[j]), default=ZERO_DEGREE)

    def matrix(self) -> PolyMatrix:
        return PolyMatrix.from_columns(self.field, self.columns, self.rows)

    def unimodular(self) -> PolyMatrix:
        return PolyMatrix.from_columns(self.field, self.transform, self.cols)


@dataclass(frozen=True)
class HermiteForm:
    """
    Lower-triangular column Hermite form

    row_degrees[i] is the degree of the i-th diagonal entry; kappa lists
    them from the last row up.
    """

    matrix: PolyMatrix
    row_degrees: Tuple[int, ...]

    @property
    def kappa(self) -> Tuple[int, ...]:
        return tuple(reversed(self.row_degrees))

    @property
    def is_simple(self) -> bool:
        """Only the last diagonal entry may be non-constant"""
        return all(d == 0 for d in self.row_degrees[:-1])

    def check_invariants(self) -> bool:
        h = self.matrix
        n = h.rows
        for i in range(n):
            diag = h[i, i]
            if diag.is_zero or diag.leading != 1:
                return False
            for j in range(n):
                e = h[i, j]
                if j > i and not e.is_zero:
                    return False
                if j < i and e.degree >= diag.degree:
                    return False
        return True


@dataclass(frozen=True)
class KroneckerHermiteForm:
    """Column-proper canonical form with monic dominant diagonal"""

    matrix: PolyMatrix
    column_degrees: Tuple[int, ...]

    def check_invariants(self) -> bool:
        h = self.matrix
        n = h.rows
        for i in range(n):
            diag = h[i, i]
            if diag.is_zero or diag.leading != 1:
                return False
            d = diag.degree
            for j in range(n):
                if j == i:
                    continue
                # Row i: off-diagonal entries below the diagonal degree
                if h[i, j].degree >= d:
                    return False
                # Column i: strictly lower degree above the diagonal, no higher below it
                above_or_below = h[j, i].degree
                if j < i and above_or_below >= d:
                    return False
                if j > i and above_or_below > d:
                    return False
        return h.is_column_proper()


# ===== Column echelon engine =====

def _echelon(work: ColumnWorkspace, reduce: bool = True):
    """Lower-triangular column echelon on a full-row-rank workspace"""
    f = work.field
    for i in range(work.rows):
        while True:
            candidates = [j for j in range(i, work.cols) if work.columns[j][i].coeffs]
            if not candidates:
                raise RankDeficientError(f"Row {i} has no pivot: matrix lacks full row rank")
            # Lowest-index column among those of minimal degree
            pivot = min(candidates, key=lambda j: (work.columns[j][i].degree, j))
            others = [j for j in candidates if j != pivot]
            if not others:
                break
            head = work.columns[pivot][i]
            for j in others:
                quot = work.columns[j][i] // head
                work.add_multiple(j, pivot, -quot)
        work.swap(i, pivot)
        work.scale(i, f.inv(work.columns[i][i].leading))
        if reduce:
            diag = work.columns[i][i]
            for j in range(i):
                entry = work.columns[j][i]
                if entry.degree >= diag.degree:
                    work.add_multiple(j, i, -(entry // diag))


def column_echelon(matrix: PolyMatrix) -> Tuple[PolyMatrix, PolyMatrix]:
    """
    Column-reduce a full-row-rank matrix to [L 0]

    Returns:
        (E, U) with matrix @ U = E, U unimodular, E = [L 0] and L lower
        triangular with monic diagonal and left entries reduced modulo it
    """
    if matrix.rows > matrix.cols:
        raise RankDeficientError(f"A {matrix.rows}x{matrix.cols} matrix cannot have full row rank")
    work = ColumnWorkspace(matrix)
    _echelon(work)
    return work.matrix(), work.unimodular()


def hermite_form(q: PolyMatrix) -> Tuple[HermiteForm, PolyMatrix]:
    """
    Hermite form H = Q U of a nonsingular square matrix

    Returns:
        (HermiteForm, U) with U unimodular
    """
    if not q.is_square:
        raise DimensionMismatchError(f"Hermite form needs a square matrix, got {q.shape}")
    try:
        h, u = column_echelon(q)
    except RankDeficientError as e:
        raise SingularMatrixError(f"Hermite form of a singular matrix: {e}") from e
    degrees = tuple(h[i, i].degree for i in range(h.rows))
    return HermiteForm(h, degrees), u


# ===== Kronecker-Hermite form =====

def _pivot(work: ColumnWorkspace, j: int) -> Tuple[int, int]:
    """(column degree, topmost row attaining it)"""
    col = work.columns[j]
    d = max((e.degree for e in col), default=ZERO_DEGREE)
    if d == ZERO_DEGREE:
        raise SingularMatrixError("Kronecker-Hermite form of a singular matrix")
    row = next(i for i, e in enumerate(col) if e.degree == d)
    return d, row


def _pivot_clash(pivots: List[Tuple[int, int]]):
    """
    Two columns sharing a pivot row, or None

    Returns (a, b) where column a has the smaller degree (lower index on ties),
    so column b can be reduced by a shifted multiple of column a.
    """
    by_row = {}
    for j, (_, row) in enumerate(pivots):
        by_row.setdefault(row, []).append(j)
    for row in sorted(by_row):
        cols = by_row[row]
        if len(cols) > 1:
            a = min(cols, key=lambda j: (pivots[j][0], j))
            b = next(j for j in cols if j != a)
            return a, b
    return None


def _largest_reducible_term(work: ColumnWorkspace, j: int, pivot_degrees: List[int]):
    """Highest (degree, then upper row) entry of column j reducible by another column's pivot"""
    best = None
    for r, e in enumerate(work.columns[j]):
        if r == j or e.degree < pivot_degrees[r]:
            continue
        key = (e.degree, -r)
        if best is None or key > best[0]:
            best = (key, r, e.degree)
    return best


def kronecker_hermite_form(q: PolyMatrix) -> Tuple[KroneckerHermiteForm, PolyMatrix]:
    """
    Kronecker-Hermite form K = Q U of a nonsingular square matrix

    The pivot of a column is its topmost entry of maximal degree. Columns
    are first reduced until all pivots sit in distinct rows (column
    properness), then permuted onto the diagonal, made monic, and finally
    every non-pivot term divisible by another column's pivot is removed.
    """
    if not q.is_square:
        raise DimensionMismatchError(f"Kronecker-Hermite form needs a square matrix, got {q.shape}")
    n = q.rows
    f = q.field
    work = ColumnWorkspace(q)

    # Distinct pivot rows
    while True:
        pivots = [_pivot(work, j) for j in range(n)]
        clash = _pivot_clash(pivots)
        if clash is None:
            break
        a, b = clash
        (da, row), (db, _) = pivots[a], pivots[b]
        lead_a = work.columns[a][row].leading
        lead_b = work.columns[b][row].leading
        factor = Poly.monomial(f, db - da, f.neg(f.div(lead_b, lead_a)))
        work.add_multiple(b, a, factor)

    # Pivot of column j onto row j, monic
    _permute_columns(work, sorted(range(n), key=lambda j: pivots[j][1]))
    for j in range(n):
        work.scale(j, f.inv(work.columns[j][j].leading))
    degrees = [work.columns[j][j].degree for j in range(n)]

    # Remove reducible terms
    for j in range(n):
        while True:
            term = _largest_reducible_term(work, j, degrees)
            if term is None:
                break
            _, r, power = term
            coeff = work.columns[j][r].coefficient(power)
            work.add_multiple(j, r, Poly.monomial(f, power - degrees[r], f.neg(coeff)))

    k = work.matrix()
    logger.debug(f"Kronecker-Hermite form with column degrees {degrees}")
    return KroneckerHermiteForm(k, tuple(degrees)), work.unimodular()


def _permute_columns(work: ColumnWorkspace, order: List[int]):
    """New column i is old column order[i]"""
    for data in (work.columns, work.transform):
        data[:] = [data[j] for j in order]


# ===== gcrd and exact division =====

def gcrd(a: PolyMatrix, b: PolyMatrix) -> Tuple[PolyMatrix, PolyMatrix]:
    """
    Greatest common right divisor of A (m x m) and B (p x m)

    Returns:
        (R, W) with W @ [A; B] = [R; 0], W unimodular, R upper triangular
        with monic diagonal; A and B both right-divide by R
    """
    if a.cols != b.cols or not a.is_square:
        raise DimensionMismatchError(f"gcrd needs A m x m and B p x m, got {a.shape} and {b.shape}")
    stack = PolyMatrix.vstack(a, b)
    try:
        echelon, v = column_echelon(stack.T)
    except RankDeficientError as e:
        raise RankDeficientError(f"Stacked matrix lacks full column rank: {e}") from e
    m = a.cols
    r = echelon.submatrix(range(m), range(m)).T
    w = v.T
    # Both inputs must right-divide by R
    exact_right_divide(a, r)
    if b.rows:
        exact_right_divide(b, r)
    return r, w


def exact_right_divide(m: PolyMatrix, r: PolyMatrix) -> PolyMatrix:
    """
    X with X @ R = M

    R is triangularised by column operations (R V = L lower triangular),
    then X L = M V is solved by back substitution with exact division.
    """
    if not r.is_square or m.cols != r.rows:
        raise DimensionMismatchError(f"Cannot right-divide {m.shape} by {r.shape}")
    try:
        lower, v = column_echelon(r)
    except RankDeficientError as e:
        raise SingularMatrixError(f"Divisor is singular: {e}") from e
    n = m @ v
    size = r.rows
    f = m.field
    rows = []
    for i in range(m.rows):
        x = [Poly.zero(f)] * size
        for j in range(size - 1, -1, -1):
            acc = n[i, j]
            for k in range(j + 1, size):
                if x[k].coeffs and lower[k, j].coeffs:
                    acc = acc - x[k] * lower[k, j]
            quot, rem = divmod(acc, lower[j, j])
            if not rem.is_zero:
                raise NonExactDivisionError(f"Row {i} of the dividend is not a right multiple of the divisor")
            x[j] = quot
        rows.append(x)
    result = PolyMatrix.from_rows(f, rows, cols=size)
    if result @ r != m:
        raise InternalConsistencyError("Exact right division failed re-multiplication")
    return result
