"""Named groups and families, all returned as multiplication tables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

import numpy as np

from .errors import GroupError, InvalidAction, NotPrimePower, NotSquarefree, OrderCapExceeded
from .gf import FiniteField, make_field
from .group import DEFAULT_ORDER_CAP, Group, group_from_elements, group_from_generators, group_from_table
from .isomorphism import DEFAULT_ISO_CAP, is_isomorphic
from .numtheory import divisors, is_squarefree, multiplicative_order, prime_power_decompose


class DomainError(GroupError, ValueError):
    """Constructor argument outside its domain."""


def _require(cond: bool, msg: str):
    if not cond:
        raise DomainError(msg)


def cyclic(n: int) -> Group:
    _require(isinstance(n, int) and n >= 1, f"Z(n) needs n >= 1, got {n}")
    i = np.arange(n)
    table = (i[:, None] + i[None, :]) % n
    return group_from_table(table, f"Z({n})", generators=[1] if n > 1 else [], check=n <= 64,
                            meta={"family": "cyclic", "n": n})


def _metacyclic_table(a: int, b: int, r: int) -> np.ndarray:
    """Pairs (x mod a, y mod b), index x*b + y, product (x1 + r^y1 x2, y1 + y2)."""
    x = np.repeat(np.arange(a), b)
    y = np.tile(np.arange(b), a)
    rpow = np.array([pow(r, k, a) if a > 1 else 0 for k in range(b)], dtype=np.int64)
    nx = (x[:, None] + rpow[y][:, None] * x[None, :]) % a
    ny = (y[:, None] + y[None, :]) % b
    return nx * b + ny


def dihedral(n: int) -> Group:
    """Dihedral group of order ``2n`` (symmetries of an n-gon)."""
    _require(isinstance(n, int) and n >= 1, f"D(n) needs n >= 1, got {n}")
    table = _metacyclic_table(n, 2, n - 1)
    gens = [2, 1] if n > 1 else [1]
    return group_from_table(table, f"D({n})", generators=gens, meta={"family": "dihedral", "n": n})


def generalized_quaternion(order: int) -> Group:
    """Q(2^k), k >= 3: <x, y | x^(2^(k-1)), y^2 = x^(2^(k-2)), y^-1 x y = x^-1>."""
    pf = prime_power_decompose(order) if isinstance(order, int) else None
    _require(pf is not None and pf[0] == 2 and pf[1] >= 3, f"Q(n) needs n = 2^k with k >= 3, got {order}")
    m = order // 2
    half = m // 2

    def mul(u, v):
        (i1, j1), (i2, j2) = u, v
        if j1 == 0:
            return ((i1 + i2) % m, j2)
        if j2 == 0:
            return ((i1 - i2) % m, 1)
        return ((i1 - i2 + half) % m, 0)

    return group_from_elements((0, 0), [(1, 0), (0, 1)], mul, f"Q({order})",
                               meta={"family": "quaternion", "n": order})


def symmetric(n: int) -> Group:
    _require(isinstance(n, int) and 1 <= n <= 7, f"S(n) needs 1 <= n <= 7, got {n}")
    gens = []
    if n >= 2:
        gens.append([1, 0] + list(range(2, n)))
    if n >= 3:
        gens.append(list(range(1, n)) + [0])
    g = group_from_generators(n, gens, f"S({n})")
    g.meta.update(family="symmetric", n=n)
    return g


def alternating(n: int) -> Group:
    _require(isinstance(n, int) and 1 <= n <= 7, f"A(n) needs 1 <= n <= 7, got {n}")
    gens = []
    for k in range(2, n):
        perm = list(range(n))
        perm[0], perm[1], perm[k] = 1, k, 0
        gens.append(perm)
    g = group_from_generators(n, gens, f"A({n})")
    g.meta.update(family="alternating", n=n)
    return g


def direct_product(g: Group, h: Group, order_cap: int = DEFAULT_ORDER_CAP, name: str = None) -> Group:
    n, m = g.order, h.order
    if n * m > order_cap:
        raise OrderCapExceeded(order_cap, n * m)
    table = (g.table.astype(np.int64)[:, None, :, None] * m + h.table[None, :, None, :]).reshape(n * m, n * m)
    gens = [x * m for x in g.generators] + list(h.generators)
    meta = {"factors": [g.name, h.name]}
    return group_from_table(table, name or f"{g.name} x {h.name}", generators=gens, meta=meta,
                            check=False)


@dataclass(frozen=True)
class SemidirectSpec:
    """``Z_a x| Z_b`` where a generator of ``Z_b`` acts on ``Z_a`` by ``x -> r x``."""

    a: int
    b: int
    r: int

    @property
    def coprime(self) -> bool:
        return math.gcd(self.a, self.b) == 1

    @property
    def action_order(self) -> int:
        return multiplicative_order(self.r, self.a)

    def validate(self) -> None:
        a, b, r = self.a, self.b, self.r
        _require(a >= 1 and b >= 1, f"SD(a,b,r) needs a, b >= 1, got {a}, {b}")
        if a > 1 and math.gcd(r, a) != 1:
            raise InvalidAction(f"{r} is not a unit mod {a}")
        if a > 1 and pow(r, b, a) != 1 % a:
            raise InvalidAction(f"{r}^{b} is not 1 mod {a}")


def semidirect_cyclic(spec: SemidirectSpec, name: str = None) -> Group:
    spec.validate()
    a, b, r = spec.a, spec.b, spec.r % spec.a if spec.a > 1 else 0
    table = _metacyclic_table(a, b, r)
    gens = [x for x in (b if a > 1 else 0, 1 if b > 1 else 0) if x]
    meta = {"semidirect": (spec.a, spec.b, r), "coprime": spec.coprime}
    return group_from_table(table, name or f"SD({spec.a},{spec.b},{spec.r})", generators=gens,
                            meta=meta, check=a * b <= 64)


def _sl2_generators(field: FiniteField):
    basis = [field.p**i for i in range(field.f)]
    upper = [(1, c, 0, 1) for c in basis]
    lower = [(1, 0, c, 1) for c in basis]
    return upper + lower


def _mat_mul(field: FiniteField):
    add, mul = field.add, field.mul

    def mm(u, v):
        a, b, c, d = u
        e, f, g, h = v
        return (
            int(add[mul[a, e], mul[b, g]]),
            int(add[mul[a, f], mul[b, h]]),
            int(add[mul[c, e], mul[d, g]]),
            int(add[mul[c, f], mul[d, h]]),
        )

    return mm


def _field_for(q: int) -> FiniteField:
    if not isinstance(q, int) or prime_power_decompose(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    return make_field(q)


def sl2(q: int, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    field = _field_for(q)
    if q * (q * q - 1) > order_cap:
        raise OrderCapExceeded(order_cap, q * (q * q - 1))
    g = group_from_elements((1, 0, 0, 1), _sl2_generators(field), _mat_mul(field), f"SL(2,{q})",
                            order_cap=order_cap, meta={"family": "SL2", "q": q})
    assert g.order == q * (q * q - 1)
    return g


def psl2(q: int, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    """PSL(2,q); each element is stored as the lexicographically least of ``{A, -A}``."""
    _require(isinstance(q, int) and q >= 3, f"PSL(2,q) needs q >= 3, got {q}")
    field = _field_for(q)
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    if expected > order_cap:
        raise OrderCapExceeded(order_cap, expected)
    neg = field._neg
    mm = _mat_mul(field)

    def canon(m):
        other = tuple(int(neg[x]) for x in m)
        return min(m, other)

    def mul(u, v):
        return canon(mm(u, v))

    gens = [canon(m) for m in _sl2_generators(field)]
    g = group_from_elements((1, 0, 0, 1), gens, mul, f"PSL(2,{q})", order_cap=order_cap,
                            meta={"family": "PSL2", "q": q})
    assert g.order == expected
    return g


def semidirect_candidates(n: int) -> List[SemidirectSpec]:
    """All ``SD(a, b, r)`` with ``ab = n``, ``gcd(a, b) = 1``, ``r^b = 1 mod a``, ``r`` in ``1..a-1``."""
    specs = []
    for a in divisors(n):
        b = n // a
        if math.gcd(a, b) != 1:
            continue
        if a == 1:
            specs.append(SemidirectSpec(1, b, 0))
            continue
        for r in range(1, a):
            if math.gcd(r, a) == 1 and pow(r, b, a) == 1:
                specs.append(SemidirectSpec(a, b, r))
    return specs


def squarefree_groups(n: int, iso_cap: int = DEFAULT_ISO_CAP) -> List[Group]:
    """All groups of squarefree order ``n`` up to isomorphism.

    Every such group is ``Z_a x| Z_b`` with ``ab = n`` and ``gcd(a, b) = 1``.
    Candidates are compared with a full isomorphism test; the first
    candidate of each class (trivial action first) is kept.
    """
    if not isinstance(n, int) or n < 1 or not is_squarefree(n):
        raise NotSquarefree(f"{n} is not squarefree")
    reps: List[Group] = []
    for spec in semidirect_candidates(n):
        name = f"Z({n})" if spec.a == 1 or spec.r % spec.a == 1 else None
        cand = semidirect_cyclic(spec, name=name)
        if name is not None:
            cand.meta["family"] = "cyclic"
        if any(is_isomorphic(cand, rep, iso_cap=iso_cap) for rep in reps):
            continue
        reps.append(cand)
    return reps
