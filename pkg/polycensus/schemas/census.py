"""
Census schemas
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from polycensus.models.enums import EstimateMethod


class CensusParameters(BaseModel):
    """Parameter record embedded in every report"""
    property: str
    field: str
    q: int = Field(..., ge=2)
    dims: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "CensusParameters":
        dims = {k: v for k, v in record.items() if k not in ("property", "field", "q")}
        return cls(property=record["property"], field=record["field"], q=record["q"], dims=dims)


class CensusResult(BaseModel):
    """Exact census outcome"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    total: int = Field(..., gt=0)
    hits: int = Field(..., ge=0)
    parameters: CensusParameters
    method: EstimateMethod = EstimateMethod.EXACT
    formula_value: Optional[Fraction] = None
    skipped: int = Field(0, ge=0)  # Items outside the conditioning event

    @model_validator(mode="after")
    def check_counts(self):
        if self.hits > self.total:
            raise ValueError(f"hits ({self.hits}) exceed total ({self.total})")
        return self

    @property
    def probability(self) -> Fraction:
        return Fraction(self.hits, self.total)

    @property
    def abs_error(self) -> Optional[Fraction]:
        if self.formula_value is None:
            return None
        return abs(self.probability - self.formula_value)

    @field_serializer("formula_value")
    def serialize_fraction(self, value: Optional[Fraction]):
        return None if value is None else str(value)


class McEstimate(BaseModel):
    """Monte Carlo estimate with a Wilson interval"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    trials: int = Field(..., gt=0)
    hits: int = Field(..., ge=0)
    ci_low: float
    ci_high: float
    seed: int
    parameters: CensusParameters
    method: EstimateMethod = EstimateMethod.MONTE_CARLO
    formula_value: Optional[Fraction] = None
    skipped: int = Field(0, ge=0)
    confidence: float = 0.95

    @model_validator(mode="after")
    def check_interval(self):
        if self.hits > self.trials:
            raise ValueError(f"hits ({self.hits}) exceed trials ({self.trials})")
        if not self.ci_low <= float(self.point) <= self.ci_high:
            raise ValueError("Point estimate outside its confidence interval")
        return self

    @property
    def point(self) -> Fraction:
        return Fraction(self.hits, self.trials)

    @property
    def stderr(self) -> float:
        p = float(self.point)
        return (p * (1 - p) / self.trials) ** 0.5

    @property
    def abs_error(self) -> Optional[Fraction]:
        if self.formula_value is None:
            return None
        return abs(self.point - self.formula_value)

    @field_serializer("formula_value")
    def serialize_fraction(self, value: Optional[Fraction]):
        return None if value is None else str(value)


class CoefficientPoint(BaseModel):
    """Scaled defect c(q) = (1 - P(q)) q^k at one field size"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    q: int
    probability: Fraction
    defect: Fraction
    method: EstimateMethod
    stderr: float = 0.0  # Standard error of the defect, zero for exact censuses

    @field_serializer("probability", "defect")
    def serialize_fraction(self, value: Fraction):
        return str(value)


class CoefficientFit(BaseModel):
    """Trend check of c(q) against the predicted leading coefficient"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    power: int
    predicted: Fraction
    points: List[CoefficientPoint]
    tolerance: float
    converged: bool
    improving: bool

    @property
    def final_deviation(self) -> float:
        return abs(float(self.points[-1].defect - self.predicted))

    @property
    def passed(self) -> bool:
        return self.converged and self.improving

    @field_serializer("predicted")
    def serialize_fraction(self, value: Fraction):
        return str(value)


class CheckResult(BaseModel):
    """One line of the verification table"""
    formula: str
    parameters: Dict[str, Any]
    expected: str
    observed: str
    passed: bool
