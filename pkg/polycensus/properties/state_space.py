"""
Census properties on state-space realisations
"""
from typing import Any, Dict, Optional

from polycensus.core.exceptions import DimensionMismatchError
from polycensus.models.enums import PropertyName
from polycensus.models.system import StateSpace
from polycensus.properties.base import CensusProperty
from polycensus.properties.spaces import ProductSpace, SampleSpace, ScalarMatrixSpace
from polycensus.services.convcode import code_from_system, is_noncatastrophic
from polycensus.services.systems import (
    is_minimal,
    is_observable,
    is_reachable,
    parallel_connect,
)


class ReachablePairsProperty(CensusProperty):
    """(A, B) in F^(n x n) x F^(n x m) passing the Kalman test"""

    name = PropertyName.REACHABLE_PAIRS
    formula_name = "reachable"
    required = ("n", "m")

    def build_space(self) -> SampleSpace:
        n, m = self.dims["n"], self.dims["m"]
        return ProductSpace(ScalarMatrixSpace(self.field, n, n), ScalarMatrixSpace(self.field, n, m))

    def test(self, item) -> Optional[bool]:
        A, B = item
        return is_reachable(A, B)


class ObservablePairsProperty(CensusProperty):
    name = PropertyName.OBSERVABLE_PAIRS
    formula_name = "observable"
    required = ("n", "p")

    def build_space(self) -> SampleSpace:
        n, p = self.dims["n"], self.dims["p"]
        return ProductSpace(ScalarMatrixSpace(self.field, n, n), ScalarMatrixSpace(self.field, p, n))

    def test(self, item) -> Optional[bool]:
        A, C = item
        return is_observable(A, C)


class MinimalSystemsProperty(CensusProperty):
    """(A, B, C, D) both reachable and observable"""

    name = PropertyName.MINIMAL_SYSTEMS
    formula_name = "minimal"
    required = ("n", "m", "p")

    def validate(self):
        super().validate()
        if self.dims["m"] < 1:
            raise DimensionMismatchError("Input count m must be >= 1")

    def build_space(self) -> SampleSpace:
        f = self.field
        n, m, p = self.dims["n"], self.dims["m"], self.dims["p"]
        return ProductSpace(
            ScalarMatrixSpace(f, n, n),
            ScalarMatrixSpace(f, n, m),
            ScalarMatrixSpace(f, p, n),
            ScalarMatrixSpace(f, p, m),
        )

    def test(self, item) -> Optional[bool]:
        return is_minimal(StateSpace(*item))

    def formula_dims(self) -> Dict[str, Any]:
        return {"m": self.dims["m"], "p": self.dims["p"]}


class ParallelReachableProperty(CensusProperty):
    """Parallel connection of N node systems with n_i states and m shared inputs"""

    name = PropertyName.PARALLEL_REACHABLE
    formula_name = "parallel_reachable"
    required = ("m", "degrees")

    def validate(self):
        super().validate()
        if self.dims["m"] < 1:
            raise DimensionMismatchError("Input count m must be >= 1")
        if not self.dims["degrees"]:
            raise DimensionMismatchError("A parallel connection needs at least one node")

    def build_space(self) -> SampleSpace:
        f = self.field
        m = self.dims["m"]
        factors = []
        for n in self.dims["degrees"]:
            factors.extend([ScalarMatrixSpace(f, n, n), ScalarMatrixSpace(f, n, m)])
        return ProductSpace(*factors)

    def nodes(self, item):
        return [(item[i], item[i + 1]) for i in range(0, len(item), 2)]

    def test(self, item) -> Optional[bool]:
        system = parallel_connect(self.nodes(item))
        return is_reachable(system.A, system.B)

    def formula_dims(self) -> Dict[str, Any]:
        return {"m": self.dims["m"], "N": len(self.dims["degrees"])}


class NoncatastrophicProperty(CensusProperty):
    """
    Codes of rate k/n and degree s from representations with (A, B) reachable

    Representations with an unreachable (A, B) fall outside the conditioning
    event and are not counted.
    """

    name = PropertyName.NONCATASTROPHIC
    formula_name = "noncatastrophic"
    required = ("s", "k", "n")

    def validate(self):
        super().validate()
        s, k, n = self.dims["s"], self.dims["k"], self.dims["n"]
        if k < 1 or n <= k:
            raise DimensionMismatchError(f"Need 1 <= k < n, got k={k}, n={n}")
        if s < 1:
            raise DimensionMismatchError("Code degree s must be >= 1")

    def build_space(self) -> SampleSpace:
        f = self.field
        s, k, n = self.dims["s"], self.dims["k"], self.dims["n"]
        return ProductSpace(
            ScalarMatrixSpace(f, s, s),
            ScalarMatrixSpace(f, s, k),
            ScalarMatrixSpace(f, n - k, s),
            ScalarMatrixSpace(f, n - k, k),
        )

    def test(self, item) -> Optional[bool]:
        A, B, C, D = item
        if not is_reachable(A, B):
            return None
        return is_noncatastrophic(code_from_system(StateSpace(A, B, C, D)).generator)

    def formula_dims(self) -> Dict[str, Any]:
        return {"n": self.dims["n"], "k": self.dims["k"]}
