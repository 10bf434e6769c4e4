"""Exact integer helpers: factorization, totient, divisor counts.

Everything here works on plain Python ints.  Orders handled by the rest of
the package stay below a few million, so trial division is all we need.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import List, Optional, Tuple

Factorization = List[Tuple[int, int]]

# Fraction is already kept in lowest terms with a positive denominator.
ExactRational = Fraction


@functools.lru_cache(maxsize=None)
def _factor_cached(n: int) -> Tuple[Tuple[int, int], ...]:
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return tuple(pairs)


def factorize(n: int) -> Factorization:
    """Return the prime factorization of ``n`` as ``[(p, e), ...]``, primes ascending."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    return list(_factor_cached(n))


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def divisor_count(n: int) -> int:
    return math.prod(e + 1 for _, e in factorize(n))


def divisors(n: int) -> List[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def distinct_prime_count(n: int) -> int:
    """Number of distinct primes dividing ``n``.

    Undefined for ``n = 1``: callers dealing with the trivial group must
    handle it themselves.
    """
    if n < 2:
        raise ValueError("distinct_prime_count is undefined for n < 2")
    return len(factorize(n))


def prime_divisors(n: int) -> List[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for _, e in factorize(n))


def prime_power_decompose(q: int) -> Optional[Tuple[int, int]]:
    """Return ``(p, f)`` with ``p**f == q`` if ``q`` is a prime power, else None."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    return fac[0]


def valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(r: int, m: int) -> int:
    """Order of ``r`` in (Z/m)^x.  ``m = 1`` gives 1."""
    if m == 1:
        return 1
    r %= m
    if math.gcd(r, m) != 1:
        raise ValueError(f"{r} is not a unit mod {m}")
    k, x = 1, r
    while x != 1:
        x = x * r % m
        k += 1
    return k


def carmichael_lambda(n: int) -> int:
    """Exponent of the unit group (Z/n)^x."""
    result = 1
    for p, e in factorize(n):
        if p == 2 and e >= 3:
            lam = 2 ** (e - 2)
        else:
            lam = p ** (e - 1) * (p - 1)
        result = math.lcm(result, lam)
    return result


def primes_above(lower: int, count: int, exclude=()) -> List[int]:
    """The ``count`` smallest primes strictly greater than ``lower``."""
    out = []
    n = lower + 1
    while len(out) < count:
        if is_prime(n) and n not in exclude:
            out.append(n)
        n += 1
    return out
