"""
Slow trend checks of scaled defects across field sizes
"""
import pytest

from polycensus.models.field import field_make
from polycensus.services.census import census_engine


@pytest.fixture
def small_fields():
    return [field_make(q) for q in (2, 3, 5)]


@pytest.mark.slow
def test_left_coprime_pairs_converge(small_fields):
    fit = census_engine.asymptotic_coefficient_fit("left-coprime", small_fields, m=2, degrees=(2, 2))
    assert fit.predicted == 1
    assert fit.final_deviation <= 0.5
    assert fit.passed


@pytest.mark.slow
def test_mutual_coprime_triples_converge(small_fields):
    fit = census_engine.asymptotic_coefficient_fit("mutual-coprime", small_fields, m=2, degrees=(1, 1, 1))
    assert fit.predicted == 4
    assert fit.final_deviation <= 2
    assert fit.improving


@pytest.mark.slow
def test_parallel_connection_by_sampling():
    fields = [field_make(q) for q in (5, 11, 17)]
    fit = census_engine.asymptotic_coefficient_fit(
        "parallel-reachable", fields, trials=100000, seed=2017, m=1, degrees=(1, 1)
    )
    assert fit.predicted == 3
    assert fit.converged


@pytest.mark.slow
def test_noncatastrophic_codes_by_sampling():
    fields = [field_make(q) for q in (2, 5, 11)]
    fit = census_engine.asymptotic_coefficient_fit(
        "noncatastrophic", fields, trials=100000, seed=2017, s=2, k=1, n=2
    )
    assert fit.power == 1
    assert fit.converged
