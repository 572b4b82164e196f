"""
State-space system and matrix fraction models
"""
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from polycensus.core.exceptions import DimensionMismatchError, FieldMismatchError
from polycensus.models.field import FieldSpec
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix

if TYPE_CHECKING:
    from polycensus.services.canonical_forms import KroneckerHermiteForm


@dataclass(frozen=True)
class StateSpace:
    """
    Discrete-time system x(t+1) = A x(t) + B u(t), y(t) = C x(t) + D u(t)

    A is n x n, B n x m, C p x n, D p x m; n and p may be zero, m >= 1.
    """

    A: FieldMatrix
    B: FieldMatrix
    C: FieldMatrix
    D: FieldMatrix

    def __post_init__(self):
        field = self.A.field
        for name in ("B", "C", "D"):
            if getattr(self, name).field != field:
                raise FieldMismatchError(f"{name} is not over {field!r}")
        n = self.A.rows
        if self.A.cols != n:
            raise DimensionMismatchError(f"A must be square, got {self.A.shape}")
        if self.B.rows != n:
            raise DimensionMismatchError(f"B must have {n} rows, got {self.B.shape}")
        m = self.B.cols
        if m < 1:
            raise DimensionMismatchError("A system needs at least one input")
        if self.C.cols != n:
            raise DimensionMismatchError(f"C must have {n} columns, got {self.C.shape}")
        if self.D.shape != (self.C.rows, m):
            raise DimensionMismatchError(f"D must be {self.C.rows}x{m}, got {self.D.shape}")

    @classmethod
    def from_pair(cls, A: FieldMatrix, B: FieldMatrix, C: Optional[FieldMatrix] = None) -> "StateSpace":
        """System with full state output (C = I) or a given C, and D = 0"""
        field = A.field
        if C is None:
            C = FieldMatrix.identity(field, A.rows)
        return cls(A, B, C, FieldMatrix.zeros(field, C.rows, B.cols))

    @property
    def field(self) -> FieldSpec:
        return self.A.field

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m(self) -> int:
        return self.B.cols

    @property
    def p(self) -> int:
        return self.C.rows

    def to_literal(self) -> dict:
        return {
            "field": str(self.field),
            "A": self.A.to_literal(),
            "B": self.B.to_literal(),
            "C": self.C.to_literal(),
            "D": self.D.to_literal(),
        }


@dataclass(frozen=True)
class MatrixFraction:
    """Right coprime fraction T = P Q^-1 with Q in Kronecker-Hermite form"""

    P: PolyMatrix
    Q: "KroneckerHermiteForm"

    @property
    def denominator(self) -> PolyMatrix:
        return self.Q.matrix

    @property
    def mcmillan_degree(self) -> int:
        return self.Q.matrix.det().degree

    def degrees_bounded(self) -> bool:
        """Column degrees of P never exceed those of Q (zero columns count as -1)"""
        p_degrees = self.P.column_degrees()
        return all(dp <= dq for dp, dq in zip(p_degrees, self.Q.column_degrees))

    def stacked(self) -> PolyMatrix:
        """[Q; P], the (m + p) x m matrix whose right primeness is coprimeness"""
        return PolyMatrix.vstack(self.Q.matrix, self.P)
