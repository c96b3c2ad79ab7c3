from collections.abc import Sequence
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .constants import MAX_TABLE_ORDER
from .errors import InvalidParametersError
from .models import FieldElement, FieldSpec


class FieldTables(NamedTuple):
    add: list[list[int]]
    sub: list[list[int]]
    mul: list[list[int]]
    neg: list[int]
    inv: list[int]  # inv[0] is unused


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    divisor = 2
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 1
    return True


def to_digits(value: int, base: int, length: int) -> list[int]:
    """Base-`base` digits of `value`, least significant first."""
    digits = []
    for _ in range(length):
        value, digit = divmod(value, base)
        digits.append(digit)
    return digits


def from_digits(digits: Sequence[int], base: int) -> int:
    value = 0
    for digit in reversed(digits):
        value = value * base + digit
    return value


def _poly_rem_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    # b is monic
    rem = [c % p for c in a]
    deg_b = len(b) - 1
    for shift in range(len(rem) - 1 - deg_b, -1, -1):
        lead = rem[shift + deg_b]
        if lead:
            for j, c in enumerate(b):
                rem[shift + j] = (rem[shift + j] - lead * c) % p
    return rem[:deg_b]


def is_irreducible(p: int, coeffs: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over F_p."""
    if not is_prime(p):
        raise InvalidParametersError(f"p must be prime, got {p}")
    coeffs = tuple(coeffs)
    degree = len(coeffs) - 1
    if degree < 1:
        raise InvalidParametersError("Irreducibility needs a polynomial of degree >= 1")
    if coeffs[-1] != 1:
        raise InvalidParametersError(f"Polynomial must be monic: {coeffs}")
    for divisor_degree in range(1, degree // 2 + 1):
        for lower in product(range(p), repeat=divisor_degree):
            if not any(_poly_rem_mod_p(coeffs, (*lower, 1), p)):
                return False
    return True


@lru_cache
def build_field(p: int, m: int) -> FieldSpec:
    """First irreducible monic modulus in ascending order of its digit encoding."""
    if not is_prime(p):
        raise InvalidParametersError(f"p must be prime, got {p}")
    if m < 1:
        raise InvalidParametersError(f"m must be at least 1, got {m}")
    for encoded in range(p**m):
        candidate = (*to_digits(encoded, p, m), 1)
        if is_irreducible(p, candidate):
            return FieldSpec(p=p, m=m, modulus=candidate, q=p**m)
    raise RuntimeError(f"No irreducible polynomial of degree {m} found over F_{p}")


def field_from_modulus(p: int, modulus: Sequence[int]) -> FieldSpec:
    modulus = tuple(modulus)
    if not is_prime(p):
        raise InvalidParametersError(f"p must be prime, got {p}")
    if len(modulus) < 2:
        raise InvalidParametersError("Modulus must have degree at least 1")
    if any(not 0 <= c < p for c in modulus):
        raise InvalidParametersError(f"Modulus coefficients must lie in [0, {p})")
    if not is_irreducible(p, modulus):
        raise InvalidParametersError(f"Modulus {modulus} is reducible over F_{p}")
    m = len(modulus) - 1
    return FieldSpec(p=p, m=m, modulus=modulus, q=p**m)


def _check(fs: FieldSpec, *elements: FieldElement) -> None:
    for a in elements:
        if not 0 <= a < fs.q:
            raise InvalidParametersError(f"{a} is not an element of F_{fs.q}")


def add(fs: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(fs, a, b)
    if fs.m == 1:
        return (a + b) % fs.p
    return from_digits(
        [
            (x + y) % fs.p
            for x, y in zip(to_digits(a, fs.p, fs.m), to_digits(b, fs.p, fs.m))
        ],
        fs.p,
    )


def neg(fs: FieldSpec, a: FieldElement) -> FieldElement:
    _check(fs, a)
    return from_digits([(-x) % fs.p for x in to_digits(a, fs.p, fs.m)], fs.p)


def sub(fs: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    return add(fs, a, neg(fs, b))


def mul(fs: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(fs, a, b)
    if fs.m == 1:
        return (a * b) % fs.p
    x, y = to_digits(a, fs.p, fs.m), to_digits(b, fs.p, fs.m)
    product_coeffs = [0] * (2 * fs.m - 1)
    for j, xj in enumerate(x):
        if xj:
            for k, yk in enumerate(y):
                product_coeffs[j + k] += xj * yk
    return from_digits(_poly_rem_mod_p(product_coeffs, fs.modulus, fs.p), fs.p)


def pow(fs: FieldSpec, a: FieldElement, k: int) -> FieldElement:
    if k < 0:
        raise InvalidParametersError(f"Exponent must be non-negative, got {k}")
    _check(fs, a)
    result, base = 1, a
    while k:
        if k & 1:
            result = mul(fs, result, base)
        base = mul(fs, base, base)
        k >>= 1
    return result


def inv(fs: FieldSpec, a: FieldElement) -> FieldElement:
    _check(fs, a)
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{fs.q}")
    return pow(fs, a, fs.q - 2)


def enumerate_elements(fs: FieldSpec) -> tuple[FieldElement, ...]:
    return tuple(range(fs.q))


def scalar(fs: FieldSpec, value: int) -> FieldElement:
    """Embed an integer into the prime subfield."""
    return value % fs.p


@lru_cache
def field_tables(fs: FieldSpec) -> FieldTables:
    if fs.q > MAX_TABLE_ORDER:
        raise InvalidParametersError(
            f"F_{fs.q} is too large for table arithmetic (limit {MAX_TABLE_ORDER})"
        )
    elements = enumerate_elements(fs)
    add_table = [[add(fs, a, b) for b in elements] for a in elements]
    mul_table = [[mul(fs, a, b) for b in elements] for a in elements]
    neg_table = [neg(fs, a) for a in elements]
    sub_table = [[add_table[a][neg_table[b]] for b in elements] for a in elements]
    inv_table = [0] + [inv(fs, a) for a in elements[1:]]
    return FieldTables(
        add=add_table, sub=sub_table, mul=mul_table, neg=neg_table, inv=inv_table
    )
