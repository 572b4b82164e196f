"""
Census Engine - exhaustive enumeration and Monte Carlo estimation
"""
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from polycensus.core.config import settings
from polycensus.core.exceptions import (
    BudgetExceededError,
    DimensionMismatchError,
    InsufficientDataError,
)
from polycensus.models.enums import EstimateMethod, PropertyName
from polycensus.models.field import FieldSpec
from polycensus.models.matrix import FieldMatrix
from polycensus.properties.base import CensusProperty
from polycensus.properties.registry import build_property
from polycensus.properties.spaces import HermiteFormSpace
from polycensus.schemas.census import (
    CensusParameters,
    CensusResult,
    CoefficientFit,
    CoefficientPoint,
    McEstimate,
)
from polycensus.services.canonical_forms import HermiteForm
from polycensus.services.formulas import (
    LeadingExpansion,
    formula_catalog,
    mutual_coefficient,
    mutual_coefficient_recursive,
)
from polycensus.services.polynomials import enumerate_monic_irreducibles
from polycensus.utils.parallel import combine_counts, run_sharded, shard_ranges
from polycensus.utils.statistics import wilson_interval


# ===== Shard workers (module level so process pools can pickle them) =====

def _count_shard(task: Tuple[CensusProperty, int, int]) -> Tuple[int, int, int]:
    """(total, hits, skipped) over the indices [start, stop)"""
    prop, start, stop = task
    space = prop.space
    total = hits = skipped = 0
    for index in range(start, stop):
        verdict = prop.test(space.unrank(index))
        if verdict is None:
            skipped += 1
            continue
        total += 1
        if verdict:
            hits += 1
    return total, hits, skipped


def _sample_shard(task: Tuple[CensusProperty, int, int, int]) -> Tuple[int, int, int]:
    """(trials, hits, skipped) for one independent RNG stream"""
    prop, seed, stream, trials = task
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))
    space = prop.space
    valid = hits = skipped = 0
    for _ in range(trials):
        verdict = prop.test(space.sample(rng))
        if verdict is None:
            skipped += 1
            continue
        valid += 1
        if verdict:
            hits += 1
    return valid, hits, skipped


def _as_fraction(value) -> Optional[Fraction]:
    if value is None:
        return None
    return Fraction(value)


class CensusEngine:
    """Runs property censuses and the checks built on them"""

    def __init__(self):
        self.budget = settings.ENUMERATION_BUDGET
        self.chunk = settings.ENUMERATION_CHUNK

    # ===== Budget =====

    def check_budget(self, size: int, what: str = "enumeration"):
        if size > self.budget:
            raise BudgetExceededError(size, self.budget, what)

    # ===== Hermite forms =====

    def enumerate_hermite_forms(self, spec: FieldSpec, m: int, n: int) -> Iterator[HermiteForm]:
        """Every m x m Hermite form with determinant degree n, each exactly once"""
        if m < 1 or n < 0:
            raise DimensionMismatchError(f"Need m >= 1 and n >= 0, got m={m}, n={n}")
        space = HermiteFormSpace(spec, m, n)
        self.check_budget(space.size(), "Hermite form enumeration")
        for index in range(space.size()):
            yield space.unrank(index)

    def enumerate_X_kappa_count(
        self,
        spec: FieldSpec,
        m: int,
        kappas: Sequence[Sequence[int]],
    ) -> int:
        """
        |X_kappa| for a tuple of row-degree profiles, by enumeration

        Each factor walks all Hermite forms of the matching determinant
        degree and counts those whose diagonal degrees read kappa from the
        last row up.
        """
        count = 1
        for kappa in kappas:
            kappa = tuple(kappa)
            if len(kappa) != m or any(k < 0 for k in kappa):
                raise DimensionMismatchError(f"kappa must have {m} non-negative entries, got {kappa}")
            matches = 0
            for form in self.enumerate_hermite_forms(spec, m, sum(kappa)):
                diagonal = tuple(form.matrix[i, i].degree for i in reversed(range(m)))
                if diagonal == kappa:
                    matches += 1
            count *= matches
        return count

    # ===== Exact census =====

    def exact_probability(
        self,
        prop: Union[CensusProperty, str, PropertyName],
        spec: Optional[FieldSpec] = None,
        workers: Optional[int] = None,
        **dims,
    ) -> CensusResult:
        """
        Exhaustive count of a property over its whole sample space

        Raises:
            BudgetExceededError: Sample space larger than ENUMERATION_BUDGET
        """
        if not isinstance(prop, CensusProperty):
            prop = build_property(prop, spec, **dims)
        size = prop.space.size()
        self.check_budget(size, f"{prop.name.value} census")
        logger.info(f"Exact census of {prop.name.value} over {prop.field!r}: {size} items")

        tasks = [(prop, start, stop) for start, stop in shard_ranges(size, self.chunk)]
        total, hits, skipped = combine_counts(run_sharded(_count_shard, tasks, workers))
        if total == 0:
            raise InsufficientDataError(f"No item of the {prop.name.value} space meets its conditioning event")

        result = CensusResult(
            total=total,
            hits=hits,
            skipped=skipped,
            parameters=CensusParameters.from_record(prop.parameters()),
            formula_value=_as_fraction(prop.prediction()),
        )
        logger.info(f"{prop.name.value}: {hits}/{total} = {result.probability}")
        return result

    # ===== Monte Carlo =====

    def mc_estimate(
        self,
        prop: Union[CensusProperty, str, PropertyName],
        trials: int,
        seed: Optional[int] = None,
        spec: Optional[FieldSpec] = None,
        workers: Optional[int] = None,
        **dims,
    ) -> McEstimate:
        """
        Uniform sampling with a Wilson interval

        Trials are split into streams of MC_CHUNK_TRIALS, stream i seeded by
        SeedSequence(seed, spawn_key=(i,)), so the estimate depends only on
        (seed, parameters) and not on the worker count. Items outside the
        conditioning event are drawn but not counted.
        """
        if trials is None or trials < settings.MC_MIN_TRIALS:
            raise InsufficientDataError(f"Monte Carlo needs at least {settings.MC_MIN_TRIALS} trials, got {trials}")
        if not isinstance(prop, CensusProperty):
            prop = build_property(prop, spec, **dims)
        seed = settings.DEFAULT_SEED if seed is None else seed
        logger.info(f"Monte Carlo {prop.name.value} over {prop.field!r}: {trials} trials, seed {seed}")

        chunk = settings.MC_CHUNK_TRIALS
        tasks = [
            (prop, seed, stream, min(chunk, trials - start))
            for stream, start in enumerate(range(0, trials, chunk))
        ]
        valid, hits, skipped = combine_counts(run_sharded(_sample_shard, tasks, workers))
        if valid == 0:
            raise InsufficientDataError(f"No sample of {prop.name.value} met its conditioning event")

        low, high = wilson_interval(hits, valid)
        estimate = McEstimate(
            trials=valid,
            hits=hits,
            skipped=skipped,
            ci_low=low,
            ci_high=high,
            seed=seed,
            confidence=settings.CONFIDENCE_LEVEL,
            parameters=CensusParameters.from_record(prop.parameters()),
            formula_value=_as_fraction(prop.prediction()),
        )
        logger.info(f"{prop.name.value}: {hits}/{valid} in [{low:.5f}, {high:.5f}]")
        return estimate

    # ===== Coefficient recursion =====

    def recursion_check(self, m: int, N: int) -> bool:
        """Closed-form C(N) agrees with the alternating-sum recursion"""
        if N < 2:
            raise DimensionMismatchError(f"Recursion starts at N = 2, got {N}")
        return mutual_coefficient(m, N) == mutual_coefficient_recursive(m, N)

    def recursion_grid_check(self, m_max: int = 8, N_max: int = 12) -> List[Tuple[int, int, bool]]:
        return [
            (m, N, self.recursion_check(m, N))
            for m in range(1, m_max + 1)
            for N in range(2, N_max + 1)
        ]

    # ===== Asymptotic fitting =====

    def _probability_at(self, prop: CensusProperty, trials: Optional[int], seed: int, workers: Optional[int]):
        if trials is None and prop.space.size() <= self.budget:
            result = self.exact_probability(prop, workers=workers)
            return result.probability, EstimateMethod.EXACT, 0.0
        if trials is None:
            raise BudgetExceededError(prop.space.size(), self.budget, f"{prop.name.value} census")
        estimate = self.mc_estimate(prop, trials, seed=seed, workers=workers)
        return estimate.point, EstimateMethod.MONTE_CARLO, estimate.stderr

    def asymptotic_coefficient_fit(
        self,
        name: Union[str, PropertyName],
        fields: Sequence[FieldSpec],
        trials: Optional[int] = None,
        seed: Optional[int] = None,
        tolerance: Optional[float] = None,
        workers: Optional[int] = None,
        **dims,
    ) -> CoefficientFit:
        """
        Scaled defects c(q) = (1 - P(q)) q^k against the predicted coefficient

        Probabilities are exact when trials is None and Monte Carlo otherwise.
        The fit passes when c at the largest q is within tolerance of the
        prediction and no further from it than c at the smallest q. The
        tolerance defaults to max(ASYMPTOTIC_ABS_TOLERANCE,
        ASYMPTOTIC_REL_FACTOR * c / q_max), widened by MC_STDERR_FACTOR
        standard errors for sampled probabilities.
        """
        if len(fields) < 3:
            raise InsufficientDataError(f"A coefficient fit needs at least 3 field sizes, got {len(fields)}")
        fields = sorted(fields, key=lambda f: f.size)
        seed = settings.DEFAULT_SEED if seed is None else seed

        points: List[CoefficientPoint] = []
        expansion: Optional[LeadingExpansion] = None
        prop_name = None
        for spec in fields:
            prop = build_property(name, spec, **dims)
            prop_name = prop.name.value
            expansion = prop.expansion()
            probability, method, stderr = self._probability_at(prop, trials, seed, workers)
            scale = spec.size ** expansion.power
            defect = expansion.scaled_defect(probability, spec.size)
            points.append(CoefficientPoint(
                q=spec.size,
                probability=probability,
                defect=defect,
                method=method,
                stderr=stderr * scale,
            ))
            logger.info(f"{prop_name} q={spec.size}: P={float(probability):.6f}, c(q)={float(defect):.4f}")

        predicted = Fraction(expansion.coefficient)
        q_max = points[-1].q
        if tolerance is None:
            tolerance = max(settings.ASYMPTOTIC_ABS_TOLERANCE, settings.ASYMPTOTIC_REL_FACTOR * float(predicted) / q_max)
        slack = settings.MC_STDERR_FACTOR * points[-1].stderr
        first = abs(float(points[0].defect - predicted))
        last = abs(float(points[-1].defect - predicted))
        converged = last <= tolerance + slack
        improving = last <= first + slack + settings.MC_STDERR_FACTOR * points[0].stderr

        fit = CoefficientFit(
            name=prop_name,
            power=expansion.power,
            predicted=predicted,
            points=points,
            tolerance=tolerance,
            converged=converged,
            improving=improving,
        )
        logger.info(f"{prop_name}: c -> {predicted}, deviation {last:.4f} (tolerance {tolerance + slack:.4f})")
        return fit

    # ===== Product and factorisation identities =====

    def parallel_product_check(
        self,
        spec: FieldSpec,
        m: int,
        degrees: Sequence[int],
        workers: Optional[int] = None,
    ) -> Tuple[Fraction, Fraction]:
        """
        Reachability of a parallel connection against prod P_{n_i,m} * P_m(N)

        Both sides are exact: the left by census over the node systems, the
        mutual-coprimeness factor on the right by census over Hermite forms
        of the same degrees.
        """
        degrees = tuple(degrees)
        direct = self.exact_probability(
            PropertyName.PARALLEL_REACHABLE, spec, workers=workers, m=m, degrees=degrees
        ).probability
        if len(degrees) >= 2:
            mutual = self.exact_probability(
                PropertyName.MUTUAL_COPRIME, spec, workers=workers, m=m, degrees=degrees
            ).probability
        else:
            mutual = Fraction(1)
        product = Fraction(formula_catalog.evaluate("parallel_product", spec, m=m, degrees=degrees, mutual=mutual))
        return direct, product

    def minimality_factorisation_check(
        self,
        spec: FieldSpec,
        n: int,
        m: int,
        p: int,
        workers: Optional[int] = None,
    ) -> Tuple[Fraction, Fraction]:
        """Pr(minimal) against Pr(right prime fraction in M(p,n,m)) * P_{n,m}, all by census"""
        minimal = self.exact_probability(
            PropertyName.MINIMAL_SYSTEMS, spec, workers=workers, n=n, m=m, p=p
        ).probability
        fraction = self.exact_probability(
            PropertyName.RIGHT_PRIME_FRACTIONS, spec, workers=workers, p=p, n=n, m=m
        ).probability
        reachable = self.exact_probability(
            PropertyName.REACHABLE_PAIRS, spec, workers=workers, n=n, m=m
        ).probability
        return minimal, fraction * reachable

    # ===== Brute-force counts =====

    def count_gl(self, spec: FieldSpec, n: int) -> int:
        """|GL_n| by testing every n x n matrix"""
        self.check_budget(FieldMatrix.space_size(spec, n, n), "GL_n enumeration")
        return sum(1 for M in FieldMatrix.all_matrices(spec, n, n) if M.is_invertible())

    def count_irreducibles(self, spec: FieldSpec, j: int) -> int:
        """Monic irreducibles of degree j by trial division"""
        self.check_budget(spec.size ** j, "irreducible enumeration")
        return len(enumerate_monic_irreducibles(spec, j))


# Singleton instance
census_engine = CensusEngine()
