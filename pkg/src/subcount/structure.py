"""Structural classifiers: solvable, nilpotent, supersolvable; Sylow subgroups."""

from __future__ import annotations

from typing import Tuple

from .group import Group, SubgroupSet, generate, is_normal, normal_closure, normalizes
from .lattice import DEFAULT_LATTICE_CAP, DEFAULT_SUBGROUP_CAP, all_subgroups, maximal_subgroups
from .numtheory import is_prime, prime_divisors, valuation


def derived_subgroup(group: Group, h: SubgroupSet) -> SubgroupSet:
    """``[H, H]``: normal closure in ``H`` of commutators of generators of ``H``."""
    seeds = [group.commutator(a, b) for i, a in enumerate(h.gens) for b in h.gens[i + 1:]]
    return normal_closure(group, seeds, within=h)


def derived_series(group: Group):
    series = [group.whole]
    while True:
        d = derived_subgroup(group, series[-1])
        if d.mask == series[-1].mask:
            return series
        series.append(d)


def lower_central_series(group: Group):
    series = [group.whole]
    while True:
        cur = series[-1]
        seeds = [group.commutator(x, g) for x in cur.gens for g in group.generators]
        nxt = normal_closure(group, seeds)
        if nxt.mask == cur.mask:
            return series
        series.append(nxt)


def is_solvable(group: Group) -> bool:
    cached = group._cache.get("solvable")
    if cached is None:
        cached = derived_series(group)[-1].order == 1
        group._cache["solvable"] = cached
    return cached


def is_nilpotent(group: Group) -> bool:
    cached = group._cache.get("nilpotent")
    if cached is None:
        cached = lower_central_series(group)[-1].order == 1
        group._cache["nilpotent"] = cached
    return cached


def is_supersolvable(group: Group, lattice_cap: int = DEFAULT_LATTICE_CAP,
                     subgroup_cap: int = DEFAULT_SUBGROUP_CAP) -> bool:
    """Huppert's criterion: every maximal subgroup has prime index.

    Needs the full lattice, so :class:`LatticeCapExceeded` propagates.
    """
    if not is_solvable(group):
        return False
    if group.order == 1:
        return True
    lattice = all_subgroups(group, lattice_cap=lattice_cap, subgroup_cap=subgroup_cap)
    return all(is_prime(group.order // m.order) for m in maximal_subgroups(lattice))


def supersolvable_by_peeling(group: Group) -> bool:
    """Search for a normal series with prime-order factors, one step at a time.

    From a normal subgroup ``N`` of a supersolvable group, ``G/N`` is again
    supersolvable and so has a normal subgroup of prime order; hence the
    greedy extension never gets stuck on a supersolvable group.  It needs no
    subgroup lattice.
    """
    if not is_solvable(group):
        return False
    n = group.order
    cur = group.trivial
    orders = group.element_orders
    while cur.order < n:
        index = n // cur.order
        step = None
        for p in prime_divisors(index):
            for g in range(n):
                if g in cur or orders[g] % p:
                    continue
                if group.power(g, p) not in cur or not normalizes(group, g, cur):
                    continue
                k = generate(group, [g], cur)
                if is_normal(k, group):
                    step = k
                    break
            if step is not None:
                break
        if step is None:
            return False
        cur = step
    return True


def sylow_subgroup(group: Group, p: int) -> SubgroupSet:
    """A Sylow ``p``-subgroup, grown by adjoining p-elements that normalise it."""
    n = group.order
    if n % p or not is_prime(p):
        raise ValueError(f"{p} is not a prime divisor of {n}")
    target = p ** valuation(n, p)
    orders = group.element_orders
    p_elements = [g for g in range(1, n) if target % int(orders[g]) == 0]
    cur = group.trivial
    while cur.order < target:
        for g in p_elements:
            if g not in cur and normalizes(group, g, cur):
                cur = generate(group, [g], cur)
                break
        else:  # pragma: no cover - impossible by the normaliser-growth argument
            raise RuntimeError("Sylow growth stalled")
    return cur


def sylow_is_cyclic_or_generalized_quaternion(group: Group, p: int) -> Tuple[bool, bool]:
    sylow = sylow_subgroup(group, p)
    size = sylow.order
    orders = group.element_orders[sylow.elements]
    cyclic = bool((orders == size).any())
    quaternion = (
        not cyclic
        and p == 2
        and size >= 8
        and int((orders == 2).sum()) == 1
        and bool((orders == size // 2).any())
    )
    return cyclic, quaternion
