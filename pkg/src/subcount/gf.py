"""Small finite fields GF(p^f) with lookup-table arithmetic.

Field elements are the integers ``0..q-1``; the base-``p`` digits of an
element are the coefficients of a polynomial in ``x`` (least significant
digit is the constant term) reduced modulo a fixed monic irreducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .errors import NotPrimePower
from .numtheory import prime_divisors, prime_power_decompose

Poly = List[int]  # coefficients, constant term first


def _trim(a: Poly) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Poly, m: Poly, p: int) -> Poly:
    a = _trim([c % p for c in a])
    m = _trim(m)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        a = _trim(a)
    return a


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_powmod(base: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = [1]
    base = poly_mod(base, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(m: Poly, p: int) -> bool:
    """Rabin's test for a monic polynomial ``m`` over F_p.

    ``m`` of degree ``f`` is irreducible iff ``x^(p^f) = x`` mod ``m`` and
    ``gcd(x^(p^(f/r)) - x, m) = 1`` for every prime ``r`` dividing ``f``.
    For ``f <= 3`` this agrees with "has no root in F_p".
    """
    m = _trim(m)
    f = len(m) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    x = [0, 1]
    if poly_sub(poly_powmod(x, p**f, m, p), x, p):
        return False
    for r in prime_divisors(f):
        h = poly_sub(poly_powmod(x, p ** (f // r), m, p), x, p)
        if len(poly_gcd(h, m, p)) != 1:
            return False
    return True


def find_irreducible(p: int, f: int) -> Poly:
    """First monic irreducible of degree ``f`` in lexicographic coefficient order."""
    if f == 1:
        return [0, 1]
    for low in itertools.product(range(p), repeat=f):
        # lexicographic on (c_{f-1}, ..., c_0)
        cand = list(reversed(low)) + [1]
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    f: int
    modulus: Tuple[int, ...]
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.f

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    @property
    def _neg(self) -> np.ndarray:
        return np.argmax(self.add == 0, axis=1)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(np.argmax(self.mul[a] == 1))

    def to_poly(self, a: int) -> Poly:
        coeffs = []
        for _ in range(self.f):
            coeffs.append(a % self.p)
            a //= self.p
        return coeffs

    def from_poly(self, coeffs: Poly) -> int:
        coeffs = list(coeffs) + [0] * (self.f - len(coeffs))
        return sum(c * self.p**i for i, c in enumerate(coeffs[: self.f]))

    def power(self, a: int, k: int) -> int:
        result = 1
        for _ in range(k):
            result = int(self.mul[result, a])
        return result

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)


def make_field(q: int) -> FiniteField:
    pf = prime_power_decompose(q)
    if pf is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, f = pf
    modulus = find_irreducible(p, f)
    polys = [None] * q
    field_tmp = FiniteField(p, f, tuple(modulus), np.zeros((1, 1)), np.zeros((1, 1)))
    for a in range(q):
        polys[a] = field_tmp.to_poly(a)
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            add[a, b] = field_tmp.from_poly([(x + y) % p for x, y in zip(polys[a], polys[b])])
            mul[a, b] = field_tmp.from_poly(poly_mod(poly_mul(_trim(polys[a]), _trim(polys[b]), p), modulus, p))
    return FiniteField(p, f, tuple(modulus), add, mul)
