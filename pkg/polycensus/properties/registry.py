"""
Property registry - maps property names to their census implementations
"""
from typing import Dict, Type

from polycensus.models.enums import PropertyName
from polycensus.models.field import FieldSpec
from polycensus.properties.base import CensusProperty
from polycensus.properties.polynomial_tuples import (
    LeftCoprimeProperty,
    MutualCoprimeProperty,
    PairwiseCoprimeProperty,
    RightPrimeFractionProperty,
    ScalarCoprimeProperty,
)
from polycensus.properties.state_space import (
    MinimalSystemsProperty,
    NoncatastrophicProperty,
    ObservablePairsProperty,
    ParallelReachableProperty,
    ReachablePairsProperty,
)

PROPERTIES: Dict[PropertyName, Type[CensusProperty]] = {
    cls.name: cls
    for cls in (
        ScalarCoprimeProperty,
        ReachablePairsProperty,
        ObservablePairsProperty,
        MinimalSystemsProperty,
        RightPrimeFractionProperty,
        LeftCoprimeProperty,
        PairwiseCoprimeProperty,
        MutualCoprimeProperty,
        ParallelReachableProperty,
        NoncatastrophicProperty,
    )
}


def build_property(name, field: FieldSpec, **dims) -> CensusProperty:
    """
    Instantiate a census property by name

    Args:
        name: PropertyName or its string form
        field: Field the census runs over
        dims: Dimensions; degree lists are normalised to tuples

    Raises:
        UnknownPropertyError: Name not registered
        DimensionMismatchError: Missing or invalid dimensions
    """
    key = name if isinstance(name, PropertyName) else PropertyName.parse(name)
    normalised = {k: tuple(v) if isinstance(v, list) else v for k, v in dims.items()}
    return PROPERTIES[key](field, **normalised)
