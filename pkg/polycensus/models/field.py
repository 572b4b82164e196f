"""
Finite field model - GF(p^e) with integer-coded elements
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple, Union

from polycensus.core.config import settings
from polycensus.core.exceptions import FieldError, FieldMismatchError, FieldZeroDivisionError

if TYPE_CHECKING:
    from numpy.random import Generator
    from polycensus.models.polynomial import Poly


_FIELD_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def is_prime(n: int) -> bool:
    """Trial-division primality test"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """
    A finite field GF(p^e)

    Elements are the integer codes 0..q-1. A code c stands for the residue
    sum(c_i * x^i) with c = sum(c_i * p^i), so the prime subfield is 0..p-1.
    The modulus is stored low-to-high, monic, and is None when e = 1.
    """

    characteristic: int
    degree: int = 1
    modulus: Optional[Tuple[int, ...]] = None

    # ===== Basic attributes =====

    @property
    def size(self) -> int:
        return self.characteristic ** self.degree

    @property
    def q(self) -> int:
        return self.size

    @property
    def t(self) -> Fraction:
        """Reciprocal of the field size"""
        return Fraction(1, self.size)

    @property
    def is_prime_field(self) -> bool:
        return self.degree == 1

    def __str__(self) -> str:
        if self.degree == 1:
            return str(self.characteristic)
        return f"{self.characteristic}^{self.degree}"

    def __repr__(self) -> str:
        return f"GF({self})"

    # ===== Construction =====

    @classmethod
    def make(cls, p: int, e: int = 1, modulus: Optional[Sequence[int]] = None) -> "FieldSpec":
        return field_make(p, e, modulus)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse a CLI field string such as "2", "3" or "2^2" """
        match = _FIELD_PATTERN.match(str(text))
        if not match:
            raise FieldError(f"Invalid field '{text}': expected 'p' or 'p^e'")
        p = int(match.group(1))
        e = int(match.group(2)) if match.group(2) else 1
        return field_make(p, e)

    # ===== Code-level arithmetic =====

    def digits(self, code: int) -> Tuple[int, ...]:
        """Base-p digits of a code, length e"""
        p = self.characteristic
        out = []
        for _ in range(self.degree):
            code, r = divmod(code, p)
            out.append(r)
        return tuple(out)

    def encode(self, digits: Sequence[int]) -> int:
        p = self.characteristic
        code = 0
        for c in reversed(list(digits)):
            code = code * p + (int(c) % p)
        return code

    @cached_property
    def _tables(self) -> Optional[Tuple[List[List[int]], List[List[int]], List[int]]]:
        # Add/mul/inv lookup tables for small extension fields
        if self.degree == 1 or self.size > settings.FIELD_TABLE_LIMIT:
            return None
        q = self.size
        add = [[self._slow_add(x, y) for y in range(q)] for x in range(q)]
        mul = [[self._slow_mul(x, y) for y in range(q)] for x in range(q)]
        inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul[x][y] == 1:
                    inv[x] = y
                    break
        return add, mul, inv

    def _slow_add(self, x: int, y: int) -> int:
        p = self.characteristic
        return self.encode([(a + b) % p for a, b in zip(self.digits(x), self.digits(y))])

    def _slow_mul(self, x: int, y: int) -> int:
        p = self.characteristic
        e = self.degree
        a = self.digits(x)
        b = self.digits(y)
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        # Reduce by the monic modulus, highest power first
        mod = self.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(e + 1):
                    prod[k - e + i] -= c * mod[i]
        return self.encode([c % p for c in prod[:e]])

    def add(self, x: int, y: int) -> int:
        if self.degree == 1:
            return (x + y) % self.characteristic
        tables = self._tables
        if tables is not None:
            return tables[0][x][y]
        return self._slow_add(x, y)

    def neg(self, x: int) -> int:
        if self.degree == 1:
            return -x % self.characteristic
        p = self.characteristic
        return self.encode([-c % p for c in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        if self.degree == 1:
            return (x - y) % self.characteristic
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.degree == 1:
            return x * y % self.characteristic
        if x == 0 or y == 0:
            return 0
        tables = self._tables
        if tables is not None:
            return tables[1][x][y]
        return self._slow_mul(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldZeroDivisionError(f"Inversion of zero in {self!r}")
        if self.degree == 1:
            return pow(x, -1, self.characteristic)
        tables = self._tables
        if tables is not None:
            return tables[2][x]
        # x^(q-2) by square-and-multiply
        result, base, k = 1, x, self.size - 2
        while k:
            if k & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            k >>= 1
        return result

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    # ===== Elements =====

    def element(self, value: Union[int, Sequence[int], "FieldElem"]) -> "FieldElem":
        """Build an element from a code, a coefficient list or an element"""
        if isinstance(value, FieldElem):
            if value.owner != self:
                raise FieldMismatchError(f"{value!r} is not an element of {self!r}")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                raise FieldError(f"Coefficient list {list(value)} longer than degree {self.degree}")
            return FieldElem(self, self.encode(value))
        code = int(value)
        if self.degree == 1:
            return FieldElem(self, code % self.characteristic)
        if not 0 <= code < self.size:
            raise FieldError(f"Element code {code} out of range for {self!r}")
        return FieldElem(self, code)

    def code_of(self, value: Union[int, Sequence[int], "FieldElem"]) -> int:
        return self.element(value).value

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def random_code(self, rng: "Generator") -> int:
        return int(rng.integers(0, self.size))

    def random_element(self, rng: "Generator") -> "FieldElem":
        return FieldElem(self, self.random_code(rng))


@dataclass(frozen=True)
class FieldElem:
    """An element of a FieldSpec, stored by its integer code"""

    owner: FieldSpec
    value: int

    @property
    def residue(self) -> Union[int, Tuple[int, ...]]:
        """Canonical residue: an int for prime fields, e coefficients otherwise"""
        if self.owner.degree == 1:
            return self.value
        return self.owner.digits(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def _other(self, other: object) -> int:
        if isinstance(other, FieldElem):
            if other.owner != self.owner:
                raise FieldMismatchError(f"Cannot combine {self.owner!r} and {other.owner!r}")
            return other.value
        if isinstance(other, int):
            # Integers act through the prime subfield, whose codes are 0..p-1
            return other % self.owner.characteristic
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.add(self.value, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.sub(self.value, y))

    def __rsub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.sub(y, self.value))

    def __mul__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.mul(self.value, y))

    __rmul__ = __mul__

    def __truediv__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.div(self.value, y))

    def __rtruediv__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.div(y, self.value))

    def __neg__(self):
        return FieldElem(self.owner, self.owner.neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = 1, self.value
        while k:
            if k & 1:
                result = self.owner.mul(result, base)
            base = self.owner.mul(base, base)
            k >>= 1
        return FieldElem(self.owner, result)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.owner, self.owner.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        if self.owner.degree != 1:
            raise FieldError("Only prime-field elements convert to int")
        return self.value

    def __repr__(self) -> str:
        return str(self.residue)


# ===== Field construction =====

@lru_cache(maxsize=None)
def _canonical_modulus(p: int, e: int) -> Tuple[int, ...]:
    """Lexicographically least (by integer code) monic irreducible of degree e"""
    from polycensus.services.polynomials import is_irreducible
    from polycensus.models.polynomial import Poly

    base = FieldSpec(p)
    for code in range(p ** e):
        low = base_digits(code, p, e)
        if low[0] == 0:
            continue
        if is_irreducible(Poly(base, low + (1,))):
            return low + (1,)
    raise FieldError(f"No irreducible polynomial of degree {e} over GF({p})")


def base_digits(code: int, p: int, length: int) -> Tuple[int, ...]:
    out = []
    for _ in range(length):
        code, r = divmod(code, p)
        out.append(r)
    return tuple(out)


def field_make(p: int, e: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """
    Build GF(p^e)

    Without a modulus an extension field uses the canonical one: the monic
    irreducible of degree e whose coefficient code is smallest.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"Characteristic {p} is not prime")
    if not isinstance(e, int) or e < 1:
        raise FieldError(f"Extension degree must be >= 1, got {e}")
    if p ** e > settings.FIELD_SIZE_LIMIT:
        raise FieldError(f"Field size {p}^{e} exceeds FIELD_SIZE_LIMIT={settings.FIELD_SIZE_LIMIT}")

    if e == 1:
        if modulus is not None and len([c for c in modulus]) not in (0, 2):
            raise FieldError("A prime field takes no modulus (or a linear one)")
        return FieldSpec(p)

    if modulus is None:
        return FieldSpec(p, e, _canonical_modulus(p, e))

    coeffs = [int(c) % p for c in modulus]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) - 1 != e:
        raise FieldError(f"Modulus must have degree {e}, got degree {len(coeffs) - 1}")
    if coeffs[-1] != 1:
        raise FieldError("Modulus must be monic")

    from polycensus.services.polynomials import is_irreducible
    from polycensus.models.polynomial import Poly

    if not is_irreducible(Poly(FieldSpec(p), tuple(coeffs))):
        raise FieldError(f"Modulus {coeffs} is reducible over GF({p})")
    return FieldSpec(p, e, tuple(coeffs))


# ===== Element operations =====

def elements(spec: FieldSpec) -> List[FieldElem]:
    """All q elements, zero first, in code order"""
    return [FieldElem(spec, c) for c in range(spec.size)]


def elem_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def elem_sub(a: FieldElem, b: FieldElem) -> FieldElem:
    return a - b


def elem_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def elem_div(a: FieldElem, b: FieldElem) -> FieldElem:
    return a / b


def elem_neg(a: FieldElem) -> FieldElem:
    return -a


def elem_inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def extension_eval(poly: "Poly", point: FieldElem) -> FieldElem:
    """
    Evaluate a polynomial over GF(p) at a point of GF(p^k)

    Prime-field coefficients embed as the codes 0..p-1 of the extension.
    """
    base = poly.field
    ext = point.owner
    if not base.is_prime_field:
        raise FieldError("extension_eval needs a polynomial over a prime field")
    if base.characteristic != ext.characteristic:
        raise FieldMismatchError(
            f"Characteristic mismatch: GF({base.characteristic}) vs {ext!r}"
        )
    acc = 0
    x = point.value
    for c in reversed(poly.coeffs):
        acc = ext.add(ext.mul(acc, x), c)
    return FieldElem(ext, acc)
