"""
Polynomials over F_q and the quotient ring F_q[x]/(x^n - 1).

Coefficients are stored constant term first everywhere. `Poly` drops trailing
zeros so degrees are canonical; `RingElement` keeps all n positions.
"""

from collections.abc import Sequence
from math import comb

from .errors import InvalidParametersError
from .gf import field_tables, scalar, to_digits
from .models import FieldElement, FieldSpec, Poly, RingElement


def make_poly(coeffs: Sequence[FieldElement]) -> Poly:
    trimmed = list(coeffs)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return Poly(coeffs=tuple(trimmed))


def poly_add(fs: FieldSpec, a: Poly, b: Poly) -> Poly:
    add = field_tables(fs).add
    length = max(len(a.coeffs), len(b.coeffs))
    x = a.coeffs + (0,) * (length - len(a.coeffs))
    y = b.coeffs + (0,) * (length - len(b.coeffs))
    return make_poly([add[u][v] for u, v in zip(x, y)])


def poly_sub(fs: FieldSpec, a: Poly, b: Poly) -> Poly:
    neg = field_tables(fs).neg
    return poly_add(fs, a, Poly(coeffs=tuple(neg[c] for c in b.coeffs)))


def poly_mul(fs: FieldSpec, a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly()
    tables = field_tables(fs)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for j, u in enumerate(a.coeffs):
        if u:
            row = tables.mul[u]
            for k, v in enumerate(b.coeffs):
                out[j + k] = tables.add[out[j + k]][row[v]]
    return make_poly(out)


def poly_divrem(fs: FieldSpec, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Return (quotient, remainder) with a = quotient * b + remainder."""
    if b.is_zero:
        raise ZeroDivisionError("Division by the zero polynomial")
    tables = field_tables(fs)
    deg_b = len(b.coeffs) - 1
    lead_inv = tables.inv[b.coeffs[-1]]
    rem = list(a.coeffs)
    if len(rem) <= deg_b:
        return Poly(), a
    quotient = [0] * (len(rem) - deg_b)
    for shift in range(len(rem) - 1 - deg_b, -1, -1):
        factor = tables.mul[rem[shift + deg_b]][lead_inv]
        if factor:
            quotient[shift] = factor
            for j, c in enumerate(b.coeffs):
                rem[shift + j] = tables.sub[rem[shift + j]][tables.mul[factor][c]]
    return make_poly(quotient), make_poly(rem[:deg_b])


def ring_zero(n: int) -> RingElement:
    return RingElement(n=n, coeffs=(0,) * n)


def ring_one(n: int) -> RingElement:
    return RingElement(n=n, coeffs=(1,) + (0,) * (n - 1))


def to_ring(fs: FieldSpec, a: Poly, n: int) -> RingElement:
    """Reduce a polynomial into F_q[x]/(x^n - 1) by folding x^j onto x^(j mod n)."""
    add = field_tables(fs).add
    out = [0] * n
    for j, c in enumerate(a.coeffs):
        out[j % n] = add[out[j % n]][c]
    return RingElement(n=n, coeffs=tuple(out))


def lift(v: RingElement) -> Poly:
    return make_poly(v.coeffs)


def _check_same_length(a: RingElement, b: RingElement) -> None:
    if a.n != b.n:
        raise InvalidParametersError(f"Ring lengths differ: {a.n} != {b.n}")


def ring_add(fs: FieldSpec, a: RingElement, b: RingElement) -> RingElement:
    _check_same_length(a, b)
    add = field_tables(fs).add
    return RingElement(n=a.n, coeffs=tuple(add[u][v] for u, v in zip(a.coeffs, b.coeffs)))


def ring_sub(fs: FieldSpec, a: RingElement, b: RingElement) -> RingElement:
    _check_same_length(a, b)
    sub = field_tables(fs).sub
    return RingElement(n=a.n, coeffs=tuple(sub[u][v] for u, v in zip(a.coeffs, b.coeffs)))


def ring_scale(fs: FieldSpec, factor: FieldElement, a: RingElement) -> RingElement:
    row = field_tables(fs).mul[factor]
    return RingElement(n=a.n, coeffs=tuple(row[c] for c in a.coeffs))


def ring_mul(fs: FieldSpec, a: RingElement, b: RingElement) -> RingElement:
    """Cyclic convolution of two ring elements."""
    _check_same_length(a, b)
    tables = field_tables(fs)
    n = a.n
    out = [0] * n
    for j, u in enumerate(a.coeffs):
        if u:
            row = tables.mul[u]
            for k, v in enumerate(b.coeffs):
                if v:
                    idx = (j + k) % n
                    out[idx] = tables.add[out[idx]][row[v]]
    return RingElement(n=n, coeffs=tuple(out))


def binomial_mod_p(top: int, bottom: int, p: int) -> int:
    """C(top, bottom) mod p, digit by digit in base p."""
    if not 0 <= bottom <= top:
        return 0
    width = 1
    while p**width <= top:
        width += 1
    result = 1
    for t, b in zip(to_digits(top, p, width), to_digits(bottom, p, width)):
        if b > t:
            return 0
        result = result * comb(t, b) % p
    return result


def _exponent_of(n: int, p: int) -> int | None:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


def x_minus_one_power(fs: FieldSpec, i: int, n: int) -> RingElement:
    """(x - 1)^i in F_q[x]/(x^n - 1) with n = p^e, via binomial expansion."""
    if _exponent_of(n, fs.p) is None:
        raise InvalidParametersError(f"Ring length {n} is not a power of {fs.p}")
    if not 0 <= i <= n:
        raise InvalidParametersError(f"Exponent must lie in [0, {n}], got {i}")
    coeffs = [
        scalar(fs, binomial_mod_p(i, j, fs.p) * (-1) ** (i - j)) for j in range(i + 1)
    ]
    return to_ring(fs, make_poly(coeffs), n)


def cyclic_shift_coeffs(
    coeffs: tuple[FieldElement, ...], s: int
) -> tuple[FieldElement, ...]:
    n = len(coeffs)
    s %= n
    return coeffs[n - s :] + coeffs[: n - s]


def cyclic_shift(v: RingElement, s: int) -> RingElement:
    """Move coefficient j to position (j + s) mod n."""
    return RingElement(n=v.n, coeffs=cyclic_shift_coeffs(v.coeffs, s))
