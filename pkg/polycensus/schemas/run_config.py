"""
Run configuration schema for command-line runs
"""
from typing import Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from polycensus.core.config import settings
from polycensus.core.exceptions import DimensionMismatchError
from polycensus.models.enums import OutputFormat, PropertyName


class RunConfig(BaseModel):
    """Validated parameters of one census or Monte Carlo run"""
    subcommand: str
    property: PropertyName
    field: str = Field(..., min_length=1)
    m: Optional[int] = Field(None, ge=0)
    n: Optional[int] = Field(None, ge=0)
    N: Optional[int] = Field(None, ge=1)
    p: Optional[int] = Field(None, ge=0)
    k: Optional[int] = Field(None, ge=1)
    s: Optional[int] = Field(None, ge=0)
    degrees: Optional[Tuple[int, ...]] = None
    trials: Optional[int] = None
    seed: int = settings.DEFAULT_SEED
    workers: int = Field(default_factory=settings.worker_count, ge=1)
    out: Optional[str] = None
    format: OutputFormat = OutputFormat(settings.OUTPUT_FORMAT)
    tolerance: Optional[float] = Field(None, gt=0)

    @field_validator("property", mode="before")
    @classmethod
    def parse_property(cls, value):
        return value if isinstance(value, PropertyName) else PropertyName.parse(value)

    @field_validator("degrees")
    @classmethod
    def check_degrees(cls, value):
        if value is not None and any(d < 0 for d in value):
            raise ValueError("Degrees must be non-negative")
        return value

    @field_validator("trials")
    @classmethod
    def check_trials(cls, value):
        if value is not None and value < settings.MC_MIN_TRIALS:
            raise ValueError(f"At least {settings.MC_MIN_TRIALS} trials are required")
        return value

    def dims(self) -> dict:
        """Dimension keywords for the property registry"""
        out = {}
        for key in ("m", "n", "p", "k", "s"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.degrees is not None:
            out["degrees"] = self.degrees
            if self.N is not None and self.N != len(self.degrees):
                raise DimensionMismatchError(f"--N {self.N} disagrees with {len(self.degrees)} degrees")
        elif self.N is not None:
            out["N"] = self.N
        return out
