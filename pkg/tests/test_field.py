"""
Tests for finite field arithmetic
"""
import pytest

from polycensus.core.exceptions import FieldError, FieldMismatchError, FieldZeroDivisionError
from polycensus.models.field import FieldSpec, elements, extension_eval, field_make
from polycensus.models.polynomial import Poly


def test_prime_field_arithmetic(gf5):
    """Prime field operations reduce modulo p"""
    a, b = gf5.element(3), gf5.element(4)
    assert (a + b).value == 2
    assert (a * b).value == 2
    assert (a - b).value == 4
    assert (a / b * b) == a
    assert a.inverse().value == 2


def test_gf4_canonical_modulus(gf4):
    """GF(4) uses x^2 + x + 1 and x * (x + 1) = 1"""
    assert gf4.modulus == (1, 1, 1)
    assert gf4.size == 4
    assert gf4.mul(2, 3) == 1
    assert gf4.inv(2) == 3
    assert gf4.element(2).residue == (0, 1)


@pytest.mark.parametrize("p,e", [(2, 2), (3, 2), (2, 3)])
def test_field_axioms(p, e):
    """Every nonzero element has an inverse and multiplication distributes"""
    spec = field_make(p, e)
    elems = elements(spec)
    assert len(elems) == p ** e
    for x in elems:
        if not x.is_zero:
            assert x * x.inverse() == spec.one
        for y in elems:
            assert x + y == y + x
            assert x * y == y * x
            for z in elems[:3]:
                assert x * (y + z) == x * y + x * z


def test_element_power_cycles(gf4):
    """The multiplicative group of GF(q) has order q - 1"""
    for x in elements(gf4)[1:]:
        assert x ** 3 == gf4.one


def test_parse():
    assert FieldSpec.parse("3").size == 3
    assert FieldSpec.parse("2^2").size == 4
    assert str(FieldSpec.parse("3^2")) == "3^2"


@pytest.mark.parametrize("text", ["4", "1", "abc", "2^0", ""])
def test_parse_rejects_bad_fields(text):
    with pytest.raises(FieldError):
        FieldSpec.parse(text)


def test_reducible_modulus_rejected():
    """x^2 + 1 = (x + 1)^2 over GF(2)"""
    with pytest.raises(FieldError):
        field_make(2, 2, modulus=(1, 0, 1))


def test_explicit_modulus_accepted():
    spec = field_make(3, 2, modulus=(1, 0, 1))
    assert spec.modulus == (1, 0, 1)
    # x^2 = -1 in GF(3)[x]/(x^2 + 1)
    assert spec.mul(3, 3) == spec.neg(1)


def test_oversize_field_rejected():
    with pytest.raises(FieldError):
        field_make(2, 21)


def test_zero_division(gf3, gf4):
    with pytest.raises(FieldZeroDivisionError):
        gf3.inv(0)
    with pytest.raises(FieldZeroDivisionError):
        gf4.element(1) / gf4.zero


def test_integer_operands_act_through_prime_subfield(gf4, gf5):
    a = gf4.element(3)
    assert (a * 2).is_zero
    assert (2 * a).is_zero
    assert a * 3 == a
    assert a + (-1) == a + gf4.one
    assert 1 - a == gf4.one - a
    assert gf5.element(3) * 7 == gf5.element(1)


def test_mixed_fields_rejected(gf2, gf3):
    with pytest.raises(FieldMismatchError):
        gf2.one + gf3.one


def test_extension_eval_finds_root(gf2, gf4):
    """The generator of GF(4) is a root of its own modulus"""
    modulus = Poly(gf2, (1, 1, 1))
    assert extension_eval(modulus, gf4.element(2)).is_zero
    assert not extension_eval(modulus, gf4.one).is_zero


def test_extension_eval_needs_matching_characteristic(gf3, gf4):
    with pytest.raises(FieldMismatchError):
        extension_eval(Poly(gf3, (1, 1)), gf4.one)
