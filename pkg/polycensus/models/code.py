"""
Convolutional code model
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from polycensus.core.exceptions import DimensionMismatchError, RankDeficientError
from polycensus.models.polymatrix import PolyMatrix


@dataclass(frozen=True)
class ConvCode:
    """
    Rate k/n code generated by the columns of an n x k polynomial matrix

    The generator must have full column rank.
    """

    generator: PolyMatrix

    def __post_init__(self):
        g = self.generator
        if g.cols < 1 or g.cols > g.rows:
            raise DimensionMismatchError(f"Generator must be n x k with 1 <= k <= n, got {g.shape}")
        if self.degree < 0:
            raise RankDeficientError("Generator matrix does not have full column rank")

    @property
    def n(self) -> int:
        return self.generator.rows

    @property
    def k(self) -> int:
        return self.generator.cols

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @cached_property
    def degree(self) -> int:
        """Largest degree among the k x k minors (-1 if all vanish)"""
        return max((minor.degree for minor in self.generator.iter_minors(self.k)), default=-1)

    @property
    def order(self) -> int:
        """Sum of the column degrees"""
        return sum(self.generator.column_degrees())
