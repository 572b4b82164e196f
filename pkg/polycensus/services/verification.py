"""
Verification Suite - exact formula checks against enumeration
"""
from fractions import Fraction
from itertools import product
from typing import Callable, List, Optional, Sequence

from loguru import logger

from polycensus.models.enums import PropertyName
from polycensus.models.field import FieldSpec, field_make
from polycensus.schemas.census import CheckResult
from polycensus.services.census import CensusEngine, census_engine
from polycensus.services.formulas import FormulaCatalog, formula_catalog


class VerificationSuite:
    """
    Exact-equality checks of the formula catalog

    Every check computes a value by enumeration and compares it with the
    catalog formula; a mismatch is reported with the formula label and the
    parameters it failed at.
    """

    def __init__(
        self,
        catalog: FormulaCatalog = formula_catalog,
        engine: CensusEngine = census_engine,
        fields: Optional[Sequence[FieldSpec]] = None,
    ):
        self.catalog = catalog
        self.engine = engine
        self.specs = list(fields) if fields else [field_make(2), field_make(3)]

    def fields(self) -> List[FieldSpec]:
        return self.specs

    def _check(self, name: str, spec: FieldSpec, observed, **dims) -> CheckResult:
        formula = self.catalog.get(name)
        expected = self.catalog.evaluate(name, spec, **dims)
        passed = Fraction(expected) == Fraction(observed)
        parameters = {"q": spec.size, **{k: list(v) if isinstance(v, tuple) else v for k, v in dims.items()}}
        if not passed:
            logger.error(f"{formula.label} mismatch at {parameters}: formula {expected}, census {observed}")
        return CheckResult(
            formula=formula.label,
            parameters=parameters,
            expected=str(expected),
            observed=str(observed),
            passed=passed,
        )

    # ===== Individual families =====

    def hermite_counts(self) -> List[CheckResult]:
        out = []
        for spec in self.fields():
            for m in (1, 2):
                for n in (0, 1, 2):
                    counted = sum(1 for _ in self.engine.enumerate_hermite_forms(spec, m, n))
                    out.append(self._check("hermite_count", spec, counted, n=n, m=m))
                    out.append(self._check("hermite_count_kappa_sum", spec, counted, n=n, m=m))
        return out

    def reachable_pairs(self) -> List[CheckResult]:
        out = []
        for spec in self.fields():
            for n in (1, 2):
                for m in (1, 2):
                    result = self.engine.exact_probability(PropertyName.REACHABLE_PAIRS, spec, n=n, m=m)
                    out.append(self._check("reachable", spec, result.probability, n=n, m=m))
        return out

    def observable_pairs(self) -> List[CheckResult]:
        out = []
        for spec in self.fields():
            for n, p in ((1, 1), (2, 1), (1, 2)):
                result = self.engine.exact_probability(PropertyName.OBSERVABLE_PAIRS, spec, n=n, p=p)
                out.append(self._check("observable", spec, result.probability, n=n, p=p))
        return out

    def general_linear(self) -> List[CheckResult]:
        out = []
        for spec in self.fields():
            for n in (1, 2, 3):
                out.append(self._check("gl_order", spec, self.engine.count_gl(spec, n), n=n))
        return out

    def irreducibles(self) -> List[CheckResult]:
        out = []
        for spec in self.fields():
            for j in range(1, 7):
                out.append(self._check("irreducible_count", spec, self.engine.count_irreducibles(spec, j), j=j))
        return out

    def x_kappa(self) -> List[CheckResult]:
        out = []
        for spec in self.fields():
            counts = {}
            for m in (1, 2):
                for kappa in product(range(3), repeat=m):
                    counts[kappa] = self.engine.enumerate_X_kappa_count(spec, m, [kappa])
                    out.append(self._check("x_kappa", spec, counts[kappa], m=m, kappa=(kappa,)))
            for pair in (((1, 0), (0, 1)), ((2, 1), (1, 1)), ((0, 2), (2, 0))):
                observed = counts[pair[0]] * counts[pair[1]]
                out.append(self._check("x_kappa", spec, observed, m=2, kappa=pair))
        return out

    def scalar_coprime(self) -> List[CheckResult]:
        out = []
        for spec in self.fields():
            for N in (2, 3):
                for degrees in product((1, 2), repeat=N):
                    result = self.engine.exact_probability(PropertyName.SCALAR_COPRIME, spec, degrees=degrees)
                    check = self._check("scalar_coprime", spec, result.probability, N=N)
                    check.parameters["degrees"] = list(degrees)
                    out.append(check)
        return out

    def coefficient_recursion(self) -> List[CheckResult]:
        label = self.catalog.get("mutual_coefficient").label
        failures = [(m, N) for m, N, ok in self.engine.recursion_grid_check() if not ok]
        return [CheckResult(
            formula=f"{label} recursion",
            parameters={"m": "1..8", "N": "2..12"},
            expected="recursion holds",
            observed="recursion holds" if not failures else f"fails at {failures}",
            passed=not failures,
        )]

    # ===== Suite =====

    def families(self) -> List[Callable[[], List[CheckResult]]]:
        return [
            self.hermite_counts,
            self.reachable_pairs,
            self.observable_pairs,
            self.general_linear,
            self.irreducibles,
            self.x_kappa,
            self.scalar_coprime,
            self.coefficient_recursion,
        ]

    def run(self, families: Optional[Sequence[Callable[[], List[CheckResult]]]] = None) -> List[CheckResult]:
        results: List[CheckResult] = []
        for family in families or self.families():
            batch = family()
            failed = sum(1 for r in batch if not r.passed)
            logger.info(f"{family.__name__}: {len(batch) - failed}/{len(batch)} checks passed")
            results.extend(batch)
        return results


# Singleton instance
verification_suite = VerificationSuite()
