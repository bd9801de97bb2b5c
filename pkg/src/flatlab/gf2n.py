"""Arithmetic in F_{2^n} for univariate power maps.

Field elements are packed polynomial-basis coordinates: bit i of an
element is the coefficient of X^i, which identifies F_{2^n} with F2^n
under the same packing the rest of the library uses. The modulus is a
degree-n irreducible polynomial given as a bitmask (bit i = coefficient
of X^i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .vecfun import VectorialFn

MIN_DEGREE = 2
MAX_DEGREE = 16


def poly_mod(a: int, b: int) -> int:
    """Remainder of polynomial division of a by b over F2 (b != 0)."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Exhaustive trial division; intended for small degrees only."""
    d = poly.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    for q in range(2, 1 << (d // 2 + 1)):
        if q.bit_length() - 1 >= 1 and poly_mod(poly, q) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Smallest irreducible degree-n bitmask (e.g. n=5 gives X^5+X^2+1)."""
    for candidate in range(1 << n, 1 << (n + 1)):
        if is_irreducible(candidate):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {n}")


@dataclass(frozen=True)
class FieldSpec:
    """A concrete F_{2^n}: extension degree plus irreducible modulus."""

    n: int
    modulus: int

    def __post_init__(self) -> None:
        if not MIN_DEGREE <= self.n <= MAX_DEGREE:
            raise ValueError(f"need {MIN_DEGREE} <= n <= {MAX_DEGREE}, got {self.n}")
        if self.modulus.bit_length() - 1 != self.n:
            raise ValueError(f"modulus {self.modulus:#x} is not of degree {self.n}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")

    @classmethod
    def default(cls, n: int) -> FieldSpec:
        return cls(n, default_modulus(n))


def field_mul(spec: FieldSpec, a: int, b: int) -> int:
    """Product in F_{2^n}: carry-less multiply, reduce by the modulus."""
    n = spec.n
    if not (0 <= a < 1 << n and 0 <= b < 1 << n):
        raise ValueError("operands must be reduced field elements")
    top = 1 << n
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= spec.modulus
    return r


def field_pow(spec: FieldSpec, a: int, e: int) -> int:
    """a^e by square and multiply; 0^0 = 1."""
    if e < 0:
        raise ValueError("negative exponent")
    result = 1
    base = a
    while e:
        if e & 1:
            result = field_mul(spec, result, base)
        base = field_mul(spec, base, base)
        e >>= 1
    return result


def power_map(spec: FieldSpec, e: int) -> VectorialFn:
    """The (n, n)-function x -> x^e under the polynomial-basis packing.

    Exponents up to 2^n - 2 are accepted; e = 2^n - 2 is the inverse
    map with 0 mapped to 0. Coordinate ANFs are recovered from the
    value table.
    """
    if not 0 <= e <= (1 << spec.n) - 2:
        raise ValueError(f"exponent must be in 0..{(1 << spec.n) - 2}, got {e}")
    values = [field_pow(spec, x, e) for x in range(1 << spec.n)]
    return VectorialFn.from_value_table(spec.n, spec.n, values)
