"""
Census properties on tuples of polynomials and Hermite forms
"""
from functools import lru_cache
from typing import Any, Dict, Optional

from polycensus.core.exceptions import DimensionMismatchError
from polycensus.models.enums import PropertyName
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.polynomial import Poly, poly_gcd_many
from polycensus.properties.base import CensusProperty
from polycensus.properties.spaces import (
    HermiteFormSpace,
    MonicPolySpace,
    ProductSpace,
    SampleSpace,
    ScalarMatrixSpace,
)
from polycensus.services.canonical_forms import kronecker_hermite_form
from polycensus.services.primeness import (
    are_left_coprime,
    is_right_prime,
    mutually_left_coprime,
    pairwise_left_coprime,
)


class ScalarCoprimeProperty(CensusProperty):
    """N monic polynomials of fixed degrees with trivial common gcd"""

    name = PropertyName.SCALAR_COPRIME
    formula_name = "scalar_coprime"
    required = ("degrees",)

    def validate(self):
        super().validate()
        if len(self.dims["degrees"]) < 2:
            raise DimensionMismatchError("Coprimeness needs at least two polynomials")

    def build_space(self) -> SampleSpace:
        return ProductSpace(*[MonicPolySpace(self.field, d) for d in self.dims["degrees"]])

    def test(self, item) -> Optional[bool]:
        return poly_gcd_many(list(item)).is_one

    def formula_dims(self) -> Dict[str, Any]:
        return {"N": len(self.dims["degrees"])}


class _HermiteTupleProperty(CensusProperty):
    """Tuples (D_1..D_N) of m x m Hermite forms with det degrees n_i"""

    required = ("m", "degrees")
    minimum_count = 2

    def validate(self):
        super().validate()
        if self.dims["m"] < 1:
            raise DimensionMismatchError("Matrix size m must be >= 1")
        if len(self.dims["degrees"]) < self.minimum_count:
            raise DimensionMismatchError(f"{self.name.value} needs at least {self.minimum_count} degrees")

    def build_space(self) -> SampleSpace:
        m = self.dims["m"]
        return ProductSpace(*[HermiteFormSpace(self.field, m, n) for n in self.dims["degrees"]])

    def formula_dims(self) -> Dict[str, Any]:
        return {"m": self.dims["m"], "N": len(self.dims["degrees"])}


class LeftCoprimeProperty(_HermiteTupleProperty):
    """Two Hermite forms whose concatenation [D_1 D_2] is left prime"""

    name = PropertyName.LEFT_COPRIME
    formula_name = "left_coprime_pair"

    def validate(self):
        super().validate()
        if len(self.dims["degrees"]) != 2:
            raise DimensionMismatchError("left-coprime takes exactly two degrees")

    def test(self, item) -> Optional[bool]:
        return are_left_coprime(*[form.matrix for form in item])

    def formula_dims(self) -> Dict[str, Any]:
        return {"m": self.dims["m"]}


class PairwiseCoprimeProperty(_HermiteTupleProperty):
    name = PropertyName.PAIRWISE_COPRIME
    formula_name = "pairwise_coprime"

    def test(self, item) -> Optional[bool]:
        return pairwise_left_coprime(*[form.matrix for form in item])


class MutualCoprimeProperty(_HermiteTupleProperty):
    name = PropertyName.MUTUAL_COPRIME
    formula_name = "mutual_coprime"

    def test(self, item) -> Optional[bool]:
        return mutually_left_coprime(*[form.matrix for form in item])


@lru_cache(maxsize=4096)
def _kronecker_of(hermite: PolyMatrix):
    form, _ = kronecker_hermite_form(hermite)
    return form


class RightPrimeFractionProperty(CensusProperty):
    """
    Right primeness of G = [Q; P] over M(p, n, m)

    Q runs over the Kronecker-Hermite forms with det degree n, reached
    through their Hermite forms, and P over the matrices with
    deg_j P <= deg_j Q. Every Q admits q^(p(n + m)) such P.
    """

    name = PropertyName.RIGHT_PRIME_FRACTIONS
    formula_name = "right_prime_fraction"
    required = ("p", "n", "m")

    def validate(self):
        super().validate()
        if self.dims["m"] < 1:
            raise DimensionMismatchError("Input count m must be >= 1")

    def build_space(self) -> SampleSpace:
        p, n, m = self.dims["p"], self.dims["n"], self.dims["m"]
        numerators = ScalarMatrixSpace(self.field, 1, p * (n + m))
        return ProductSpace(numerators, HermiteFormSpace(self.field, m, n))

    def numerator(self, digits, column_degrees) -> PolyMatrix:
        """Spread p (n + m) coefficient digits over P, column j taking p (nu_j + 1)"""
        f = self.field
        p = self.dims["p"]
        m = self.dims["m"]
        data = list(digits.data)
        columns = []
        pos = 0
        for j in range(m):
            width = column_degrees[j] + 1
            column = []
            for _ in range(p):
                column.append(tuple(data[pos:pos + width]))
                pos += width
            columns.append(column)
        rows = [[Poly(f, columns[j][i]) for j in range(m)] for i in range(p)]
        return PolyMatrix.from_rows(f, rows, cols=m)

    def test(self, item) -> Optional[bool]:
        digits, hermite = item
        kh = _kronecker_of(hermite.matrix)
        P = self.numerator(digits, kh.column_degrees)
        return is_right_prime(PolyMatrix.vstack(kh.matrix, P))

    def formula_dims(self) -> Dict[str, Any]:
        return {"p": self.dims["p"]}
