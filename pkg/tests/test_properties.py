"""
Tests for census properties and their sample spaces
"""
from fractions import Fraction

import pytest

from polycensus.core.exceptions import DimensionMismatchError, UnknownPropertyError
from polycensus.models.enums import PropertyName
from polycensus.properties.registry import PROPERTIES, build_property
from polycensus.properties.spaces import (
    HermiteFormSpace,
    MonicPolySpace,
    PolyBelowDegreeSpace,
    ProductSpace,
    ScalarMatrixSpace,
    uniform_index,
)
from polycensus.services.formulas import hermite_count


def test_every_property_is_registered():
    assert set(PROPERTIES) == set(PropertyName)


def test_property_name_parsing():
    assert PropertyName.parse("Mutual_Coprime") == PropertyName.MUTUAL_COPRIME
    with pytest.raises(UnknownPropertyError):
        PropertyName.parse("coprime-ish")


def test_space_sizes(gf3):
    assert ScalarMatrixSpace(gf3, 2, 2).size() == 81
    assert MonicPolySpace(gf3, 2).size() == 9
    assert PolyBelowDegreeSpace(gf3, 2).size() == 9
    assert HermiteFormSpace(gf3, 2, 2).size() == hermite_count(3, 2, 2)
    assert ProductSpace(MonicPolySpace(gf3, 1), ScalarMatrixSpace(gf3, 1, 2)).size() == 27


def test_unrank_is_a_bijection(gf2):
    space = ProductSpace(MonicPolySpace(gf2, 2), PolyBelowDegreeSpace(gf2, 2))
    items = {space.unrank(i) for i in range(space.size())}
    assert len(items) == space.size()


def test_sampling_stays_in_space(gf3, rng):
    space = HermiteFormSpace(gf3, 2, 1)
    for _ in range(50):
        form = space.sample(rng)
        assert form.check_invariants()
        assert sum(form.row_degrees) == 1


def test_uniform_index_beyond_64_bits(rng):
    size = 3 ** 50
    for _ in range(20):
        assert 0 <= uniform_index(rng, size) < size


def test_build_property_normalises_lists(gf2):
    prop = build_property("mutual-coprime", gf2, m=1, degrees=[1, 1])
    assert prop.dims["degrees"] == (1, 1)
    assert prop.parameters() == {"property": "mutual-coprime", "field": "2", "q": 2, "m": 1, "degrees": [1, 1]}


@pytest.mark.parametrize("name,dims", [
    ("reachable-pairs", {"n": 2}),
    ("scalar-coprime", {"degrees": (1,)}),
    ("left-coprime", {"m": 1, "degrees": (1, 1, 1)}),
    ("noncatastrophic", {"s": 1, "k": 2, "n": 2}),
    ("minimal-systems", {"n": 1, "m": 0, "p": 1}),
    ("parallel-reachable", {"m": 1, "degrees": ()}),
    ("reachable-pairs", {"n": -1, "m": 1}),
])
def test_invalid_dimensions(gf2, name, dims):
    with pytest.raises(DimensionMismatchError):
        build_property(name, gf2, **dims)


def test_scalar_coprime_predicate(gf2):
    prop = build_property(PropertyName.SCALAR_COPRIME, gf2, degrees=(1, 2))
    hits = sum(1 for i in range(prop.space.size()) if prop.test(prop.space.unrank(i)))
    assert Fraction(hits, prop.space.size()) == Fraction(1, 2)
    assert prop.prediction() == Fraction(1, 2)


def test_parallel_nodes(gf2):
    prop = build_property(PropertyName.PARALLEL_REACHABLE, gf2, m=1, degrees=(1, 2))
    item = prop.space.unrank(0)
    nodes = prop.nodes(item)
    assert [A.shape for A, _ in nodes] == [(1, 1), (2, 2)]
    assert [B.shape for _, B in nodes] == [(1, 1), (2, 1)]


def test_noncatastrophic_skips_unreachable(gf2):
    prop = build_property(PropertyName.NONCATASTROPHIC, gf2, s=1, k=1, n=2)
    verdicts = [prop.test(prop.space.unrank(i)) for i in range(prop.space.size())]
    assert verdicts.count(None) == 8
    assert verdicts.count(True) == 4


def test_right_prime_fraction_space(gf2):
    prop = build_property(PropertyName.RIGHT_PRIME_FRACTIONS, gf2, p=1, n=1, m=1)
    assert prop.space.size() == 8
    assert prop.formula_dims() == {"p": 1}


def test_asymptotic_prediction(gf3):
    prop = build_property(PropertyName.LEFT_COPRIME, gf3, m=2, degrees=(1, 1))
    assert prop.prediction() == Fraction(8, 9)
    assert prop.expansion().power == 2


def test_properties_pickle(gf2):
    """Worker processes receive properties without their spaces"""
    import pickle

    prop = build_property(PropertyName.REACHABLE_PAIRS, gf2, n=1, m=1)
    prop.space.size()
    clone = pickle.loads(pickle.dumps(prop))
    assert clone._space is None
    assert clone.space.size() == prop.space.size()
