"""
Base Census Property - Abstract class for countable predicates
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple

from polycensus.core.exceptions import DimensionMismatchError
from polycensus.models.enums import PropertyName
from polycensus.models.field import FieldSpec
from polycensus.properties.spaces import SampleSpace
from polycensus.services.formulas import FormulaValue, LeadingExpansion, formula_catalog


class CensusProperty(ABC):
    """
    Abstract base class for census properties
    All properties must inherit from this class

    A property owns a finite sample space and a predicate on it. The
    predicate returns None for items outside a conditioning event, which
    are then left out of both the total and the hits.
    """

    name: PropertyName
    formula_name: str
    required: Tuple[str, ...] = ()

    def __init__(self, field: FieldSpec, **dims):
        self.field = field
        missing = [key for key in self.required if dims.get(key) is None]
        if missing:
            raise DimensionMismatchError(f"Property {self.name.value} needs {', '.join(missing)}")
        self.dims: Dict[str, Any] = {key: dims[key] for key in self.required}
        self.validate()
        self._space: Optional[SampleSpace] = None

    def validate(self):
        """Check dimension preconditions"""
        for key, value in self.dims.items():
            values = value if isinstance(value, tuple) else (value,)
            if any(v < 0 for v in values):
                raise DimensionMismatchError(f"{key} must be non-negative, got {value}")

    @property
    def space(self) -> SampleSpace:
        if self._space is None:
            self._space = self.build_space()
        return self._space

    @abstractmethod
    def build_space(self) -> SampleSpace:
        """The uniform sample space of the property"""
        pass

    @abstractmethod
    def test(self, item: Any) -> Optional[bool]:
        """
        Evaluate the predicate on one item

        Returns: True / False, or None when the item is outside the conditioning event
        """
        pass

    def formula_dims(self) -> Dict[str, Any]:
        """Dimensions the catalog formula needs"""
        return dict(self.dims)

    def formula_value(self) -> FormulaValue:
        return formula_catalog.evaluate(self.formula_name, self.field, **self.formula_dims())

    def prediction(self):
        """Exact formula value, or the leading-order value for asymptotic formulas"""
        value = self.formula_value()
        if isinstance(value, LeadingExpansion):
            return value.value(self.field.t)
        return value

    def expansion(self) -> LeadingExpansion:
        return formula_catalog.expansion(self.formula_name, **self.formula_dims())

    def parameters(self) -> Dict[str, Any]:
        record = {"property": self.name.value, "field": str(self.field), "q": self.field.size}
        for key, value in self.dims.items():
            record[key] = list(value) if isinstance(value, tuple) else value
        return record

    def __getstate__(self):
        # Spaces are rebuilt lazily in worker processes
        state = dict(self.__dict__)
        state["_space"] = None
        return state
