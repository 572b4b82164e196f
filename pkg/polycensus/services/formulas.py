"""
Formula catalog - closed-form counts and probabilities, exact and leading-order
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from polycensus.core.exceptions import DimensionMismatchError, UnknownFormulaError
from polycensus.models.enums import FormulaKind
from polycensus.models.field import FieldSpec
from polycensus.services.polynomials import count_monic_irreducibles


@dataclass(frozen=True)
class LeadingExpansion:
    """
    1 - coefficient * t^power + O(t^(power + 1))
    """

    coefficient: Fraction
    power: int

    @property
    def error_order(self) -> int:
        return self.power + 1

    def value(self, t: Fraction) -> Fraction:
        """Leading-order prediction at t"""
        return 1 - Fraction(self.coefficient) * t ** self.power

    def scaled_defect(self, probability: Fraction, q: int) -> Fraction:
        """(1 - P) q^power, which tends to the coefficient as q grows"""
        return (1 - Fraction(probability)) * q ** self.power

    def __str__(self) -> str:
        return f"1 - {self.coefficient}*t^{self.power} + O(t^{self.error_order})"


FormulaValue = Union[Fraction, int, LeadingExpansion]


@dataclass(frozen=True)
class Formula:
    """A catalog entry"""

    name: str
    label: str
    kind: FormulaKind
    params: Tuple[str, ...]
    evaluator: Callable[..., FormulaValue]
    description: str = ""
    expansion: Optional[Callable[..., LeadingExpansion]] = field(default=None, compare=False)


# ===== Building blocks =====

def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def reachable_probability(t: Fraction, n: int, m: int) -> Fraction:
    """prod_{j=m}^{n+m-1} (1 - t^j)"""
    result = Fraction(1)
    for j in range(m, n + m):
        result *= 1 - t ** j
    return result


def hermite_count(q: int, n: int, m: int) -> int:
    """t^(-mn) prod_{j=1}^n (1 - t^(m+j-1)) / (1 - t^j)"""
    t = Fraction(1, q)
    value = Fraction(q) ** (m * n)
    for j in range(1, n + 1):
        value *= (1 - t ** (m + j - 1)) / (1 - t ** j)
    if value.denominator != 1:
        raise DimensionMismatchError(f"Hermite count is not an integer for q={q}, n={n}, m={m}")
    return int(value)


def x_kappa_count(q: int, m: int, kappa: Sequence[int]) -> int:
    """|X_kappa| for one matrix: prod_j q^((m - j + 1) kappa_j), kappa = (kappa_1..kappa_m)"""
    if len(kappa) != m or any(k < 0 for k in kappa):
        raise DimensionMismatchError(f"kappa must have {m} non-negative entries, got {tuple(kappa)}")
    exponent = sum((m - j) * k for j, k in enumerate(kappa))
    return q ** exponent


def hermite_count_kappa_sum(q: int, n: int, m: int) -> int:
    return sum(x_kappa_count(q, m, kappa) for kappa in compositions(n, m))


def c_kappa(kappa_tuples: Sequence[Sequence[int]]) -> int:
    """sum_i sum_j (j - 1) kappa_j^(i)"""
    return sum(j * k for kappa in kappa_tuples for j, k in enumerate(kappa))


def gl_order(q: int, n: int) -> int:
    """|GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)"""
    result = 1
    for i in range(n):
        result *= q ** n - q ** i
    return result


def mutual_coefficient(m: int, N: int) -> int:
    """C(N) = -sum_{y=2}^{m+1} binom(N, y)"""
    return -sum(comb(N, y) for y in range(2, m + 2))


def mutual_coefficient_recursive(m: int, N: int) -> int:
    """C(N) = sum_{k=1}^{N-2} (-1)^(k+1) binom(N, k) C(N - k) - [m >= N - 1]"""
    values: Dict[int, int] = {}
    for size in range(2, N + 1):
        total = sum(
            (-1) ** (k + 1) * comb(size, k) * values[size - k]
            for k in range(1, size - 1)
        )
        values[size] = total - (1 if m >= size - 1 else 0)
    return values[N]


# ===== Catalog =====

class FormulaCatalog:
    """Named evaluators for every count and probability the census checks"""

    def __init__(self):
        self._formulas: Dict[str, Formula] = {}
        self._register_defaults()

    @staticmethod
    def _key(name: str) -> str:
        return str(name).strip().lower().replace("-", "_")

    def register(self, formula: Formula):
        self._formulas[self._key(formula.name)] = formula

    def names(self) -> List[str]:
        return sorted(f.name for f in self._formulas.values())

    def get(self, name: str) -> Formula:
        formula = self._formulas.get(self._key(name))
        if formula is None:
            raise UnknownFormulaError(f"Unknown formula '{name}'. Known: {', '.join(self.names())}")
        return formula

    def _check_params(self, formula: Formula, dims: dict):
        missing = [p for p in formula.params if dims.get(p) is None]
        if missing:
            raise DimensionMismatchError(f"Formula {formula.label} needs {', '.join(missing)}")

    def evaluate(self, name: str, spec: FieldSpec, **dims) -> FormulaValue:
        formula = self.get(name)
        self._check_params(formula, dims)
        return formula.evaluator(spec, **{p: dims[p] for p in formula.params})

    def expansion(self, name: str, **dims) -> LeadingExpansion:
        """Leading-order descriptor of a formula (asymptotic or exact with known leading term)"""
        formula = self.get(name)
        if formula.expansion is None:
            raise UnknownFormulaError(f"Formula {formula.label} has no leading-order expansion")
        self._check_params(formula, dims)
        return formula.expansion(**{p: dims[p] for p in formula.params})

    def _register_defaults(self):
        exact, asymptotic = FormulaKind.EXACT, FormulaKind.ASYMPTOTIC

        # ===== Exact =====
        self.register(Formula(
            "reachable", "P_{n,m}", exact, ("n", "m"),
            lambda F, n, m: reachable_probability(F.t, n, m),
            "Probability that (A, B) is reachable",
            lambda n, m: LeadingExpansion(Fraction(1), m),
        ))
        self.register(Formula(
            "observable", "P^obs_{n,p}", exact, ("n", "p"),
            lambda F, n, p: reachable_probability(F.t, n, p),
            "Probability that (A, C) is observable",
            lambda n, p: LeadingExpansion(Fraction(1), p),
        ))
        self.register(Formula(
            "hermite_count", "H_{n,m}", exact, ("n", "m"),
            lambda F, n, m: hermite_count(F.size, n, m),
            "Number of m x m Hermite forms with det degree n (product form)",
        ))
        self.register(Formula(
            "hermite_count_kappa_sum", "H_{n,m} (kappa sum)", exact, ("n", "m"),
            lambda F, n, m: hermite_count_kappa_sum(F.size, n, m),
            "Number of m x m Hermite forms with det degree n (sum over row degrees)",
        ))
        self.register(Formula(
            "gl_order", "|GL_n|", exact, ("n",),
            lambda F, n: gl_order(F.size, n),
            "Number of invertible n x n matrices",
        ))
        self.register(Formula(
            "irreducible_count", "phi_j", exact, ("j",),
            lambda F, j: count_monic_irreducibles(F, j),
            "Number of monic irreducible polynomials of degree j",
        ))
        self.register(Formula(
            "scalar_coprime", "1-t^{N-1}", exact, ("N",),
            lambda F, N: 1 - F.t ** (N - 1),
            "Probability that N monic polynomials of fixed degrees are coprime",
            lambda N: LeadingExpansion(Fraction(1), N - 1),
        ))
        self.register(Formula(
            "x_kappa", "|X_kappa|", exact, ("m", "kappa"),
            lambda F, m, kappa: _product(x_kappa_count(F.size, m, k) for k in kappa),
            "Number of Hermite-form tuples with prescribed row degrees",
        ))
        self.register(Formula(
            "x_total", "|X(n_1..n_N)|", exact, ("m", "degrees"),
            lambda F, m, degrees: _product(hermite_count(F.size, n, m) for n in degrees),
            "Number of Hermite-form tuples with prescribed det degrees",
        ))
        self.register(Formula(
            "c_kappa", "c_kappa", exact, ("kappa",),
            lambda F, kappa: c_kappa(kappa),
            "Codimension exponent of X_kappa inside X",
        ))
        self.register(Formula(
            "mutual_coefficient", "C(N)", exact, ("m", "N"),
            lambda F, m, N: mutual_coefficient(m, N),
            "t^m coefficient of the mutual coprimeness probability",
        ))
        self.register(Formula(
            "parallel_product", "prod P_{n_i,m} * P_m(N)", exact, ("m", "degrees", "mutual"),
            lambda F, m, degrees, mutual: _product(
                reachable_probability(F.t, n, m) for n in degrees
            ) * Fraction(mutual),
            "Reachability of a parallel connection given the mutual coprimeness probability",
        ))

        # ===== Leading order =====
        self.register(Formula(
            "right_prime_fraction", "P^rc_{p,n,m}", asymptotic, ("p",),
            lambda F, p: LeadingExpansion(Fraction(1), p),
            "Probability that [Q; P] in M(p,n,m) is right prime",
            lambda p: LeadingExpansion(Fraction(1), p),
        ))
        self.register(Formula(
            "minimal", "P^min_{p,n,m}", asymptotic, ("m", "p"),
            lambda F, m, p: _minimal_expansion(m, p),
            "Probability that (A, B, C, D) is minimal",
            _minimal_expansion,
        ))
        self.register(Formula(
            "left_coprime_pair", "1-t^m", asymptotic, ("m",),
            lambda F, m: LeadingExpansion(Fraction(1), m),
            "Probability that two Hermite forms are left coprime",
            lambda m: LeadingExpansion(Fraction(1), m),
        ))
        self.register(Formula(
            "pairwise_coprime", "1-N(N-1)/2 t^m", asymptotic, ("m", "N"),
            lambda F, m, N: _pairwise_expansion(m, N),
            "Probability that N Hermite forms are pairwise left coprime",
            _pairwise_expansion,
        ))
        self.register(Formula(
            "mutual_coprime", "P_m(N)", asymptotic, ("m", "N"),
            lambda F, m, N: _mutual_expansion(m, N),
            "Probability that N Hermite forms are mutually left coprime",
            _mutual_expansion,
        ))
        self.register(Formula(
            "parallel_reachable", "1-sum binom(N,y) t^m", asymptotic, ("m", "N"),
            lambda F, m, N: _parallel_expansion(m, N),
            "Probability that a parallel connection of N systems is reachable",
            _parallel_expansion,
        ))
        self.register(Formula(
            "noncatastrophic", "1-t^{n-k}", asymptotic, ("n", "k"),
            lambda F, n, k: LeadingExpansion(Fraction(1), n - k),
            "Probability that a rate k/n code is non-catastrophic",
            lambda n, k: LeadingExpansion(Fraction(1), n - k),
        ))


def _product(values) -> Union[int, Fraction]:
    result = 1
    for v in values:
        result *= v
    return result


def _minimal_expansion(m: int, p: int) -> LeadingExpansion:
    k = min(m, p)
    return LeadingExpansion(Fraction(int(m == k) + int(p == k)), k)


def _pairwise_expansion(m: int, N: int) -> LeadingExpansion:
    return LeadingExpansion(Fraction(N * (N - 1), 2), m)


def _mutual_expansion(m: int, N: int) -> LeadingExpansion:
    return LeadingExpansion(Fraction(-mutual_coefficient(m, N)), m)


def _parallel_expansion(m: int, N: int) -> LeadingExpansion:
    return LeadingExpansion(Fraction(sum(comb(N, y) for y in range(1, m + 2))), m)


def eval_formula(name: str, spec: FieldSpec, **dims) -> FormulaValue:
    return formula_catalog.evaluate(name, spec, **dims)


# Global catalog instance
formula_catalog = FormulaCatalog()
