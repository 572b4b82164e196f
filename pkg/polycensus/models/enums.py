"""
Enumerations
"""
import enum


class PropertyName(str, enum.Enum):
    """Census property enumeration"""
    SCALAR_COPRIME = "scalar-coprime"
    REACHABLE_PAIRS = "reachable-pairs"
    OBSERVABLE_PAIRS = "observable-pairs"
    MINIMAL_SYSTEMS = "minimal-systems"
    RIGHT_PRIME_FRACTIONS = "right-prime-fractions"
    LEFT_COPRIME = "left-coprime"
    PAIRWISE_COPRIME = "pairwise-coprime"
    MUTUAL_COPRIME = "mutual-coprime"
    PARALLEL_REACHABLE = "parallel-reachable"
    NONCATASTROPHIC = "noncatastrophic"

    @classmethod
    def parse(cls, name: str) -> "PropertyName":
        """Accept hyphen or underscore spellings, any case"""
        from polycensus.core.exceptions import UnknownPropertyError

        key = str(name).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == key:
                return member
        raise UnknownPropertyError(
            f"Unknown property '{name}'. Choose one of: {', '.join(m.value for m in cls)}"
        )


class FormulaKind(str, enum.Enum):
    """Formula kind enumeration"""
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"


class EstimateMethod(str, enum.Enum):
    """How a probability was obtained"""
    EXACT = "exact"
    MONTE_CARLO = "mc"


class OutputFormat(str, enum.Enum):
    """Report format enumeration"""
    CSV = "csv"
    JSON = "json"
