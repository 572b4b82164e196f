"""
Univariate polynomial model over a finite field
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from polycensus.core.exceptions import (
    FieldMismatchError,
    FieldZeroDivisionError,
    ZeroPolynomialError,
)
from polycensus.models.field import FieldElem, FieldSpec


# Degree of the zero polynomial
ZERO_DEGREE = -1


def _strip(coeffs: List[int]) -> Tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add(field: FieldSpec, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if field.degree == 1:
        p = field.characteristic
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
    else:
        for i, c in enumerate(b):
            out[i] = field.add(out[i], c)
    return out


def _mul(field: FieldSpec, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    if field.degree == 1:
        p = field.characteristic
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = field.add(out[i + j], field.mul(x, y))
    return out


def _divmod(field: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Tuple[List[int], List[int]]:
    if not b:
        raise FieldZeroDivisionError("Division by the zero polynomial")
    if len(a) < len(b):
        return [], list(a)
    rem = list(a)
    lb = len(b)
    inv_lead = field.inv(b[-1])
    quot = [0] * (len(a) - lb + 1)
    for i in range(len(a) - lb, -1, -1):
        c = field.mul(rem[i + lb - 1], inv_lead)
        quot[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] = field.sub(rem[i + j], field.mul(c, y))
    return quot, rem[: lb - 1]


@dataclass(frozen=True)
class Poly:
    """
    Polynomial sum(coeffs[i] * z^i) over a FieldSpec

    Coefficients are element codes with no trailing zeros; the zero
    polynomial has an empty tuple and degree ZERO_DEGREE.
    """

    field: FieldSpec
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = self.coeffs
        if not isinstance(coeffs, tuple) or (coeffs and coeffs[-1] == 0):
            object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    # ===== Constructors =====

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def constant(cls, field: FieldSpec, value: Union[int, Sequence[int], FieldElem]) -> "Poly":
        return cls(field, (field.code_of(value),))

    @classmethod
    def z(cls, field: FieldSpec) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, power: int, value: int = 1) -> "Poly":
        return cls(field, (0,) * power + (value,))

    @classmethod
    def from_coefficients(cls, field: FieldSpec, coefficients: Sequence) -> "Poly":
        """Low-to-high coefficients; each an int code, a digit list or a FieldElem"""
        return cls(field, tuple(field.code_of(c) for c in coefficients))

    # ===== Attributes =====

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def leading(self) -> int:
        """Leading coefficient code (0 for the zero polynomial)"""
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def _check(self, other: "Poly"):
        if other.field != self.field:
            raise FieldMismatchError(f"Polynomials over {self.field!r} and {other.field!r}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElem)):
            return Poly.constant(self.field, other)
        return NotImplemented

    # ===== Arithmetic =====

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly(self.field, _strip(_add(self.field, self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, tuple(f.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly(self.field, _strip(_mul(self.field, self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def scale(self, code: int) -> "Poly":
        """Multiply by a field element given by its code"""
        f = self.field
        if code == 0:
            return Poly(f, ())
        return Poly(f, tuple(f.mul(c, code) for c in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by z^k"""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check(other)
        q, r = _divmod(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, _strip(q)), Poly(self.field, _strip(r))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("Negative powers of polynomials are not polynomials")
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    def __call__(self, x: Union[int, FieldElem]) -> FieldElem:
        """Evaluate at an element of the same field (Horner)"""
        f = self.field
        point = f.code_of(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, point), c)
        return FieldElem(f, acc)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ===== Presentation =====

    def to_list(self) -> list:
        """Coefficient list low-to-high (digit lists for extension fields)"""
        if self.field.degree == 1:
            return list(self.coeffs)
        return [list(self.field.digits(c)) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            label = repr(FieldElem(self.field, c))
            if power == 0:
                terms.append(label)
            else:
                mono = "z" if power == 1 else f"z^{power}"
                terms.append(mono if c == 1 else f"{label}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self})"


# ===== Greatest common divisors =====

def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via Euclid; gcd(a, 0) = monic(a)"""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_gcd_many(polys: Sequence[Poly]) -> Poly:
    """gcd of a sequence, zero when every entry is zero; stops early at 1"""
    result = None
    for p in polys:
        if p.is_zero:
            continue
        result = p.monic() if result is None else poly_gcd(result, p)
        if result.degree == 0:
            return result
    if result is None:
        if not polys:
            raise ZeroPolynomialError("gcd of an empty sequence")
        return Poly.zero(polys[0].field)
    return result


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_sub(a: Poly, b: Poly) -> Poly:
    return a - b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    return divmod(a, b)
