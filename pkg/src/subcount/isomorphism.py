"""Isomorphism testing by invariant rejection plus generator-image backtracking."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from .errors import IsomorphismCapExceeded, LatticeCapExceeded
from .group import Group, class_size_multiset, cyclic_subgroups, order_counts, small_generating_set
from .lattice import all_subgroups

DEFAULT_ISO_CAP = 2000


def _cheap_fingerprint(g: Group):
    return (
        g.order,
        tuple(sorted(order_counts(g).items())),
        len(cyclic_subgroups(g)),
        class_size_multiset(g),
    )


def _sub_or_none(g: Group, lattice_cap: int) -> Optional[int]:
    try:
        return len(all_subgroups(g, lattice_cap=lattice_cap))
    except LatticeCapExceeded:
        return None


def _search_generators(g: Group) -> List[int]:
    gens = g._cache.get("iso_gens")
    if gens is None:
        gens = small_generating_set(g.table, g.element_orders)
        g._cache["iso_gens"] = gens
    return gens


def _extend_map(g: Group, h: Group, gens: Sequence[int], images: Sequence[int]) -> Optional[Dict[int, int]]:
    """Map ``<gens>`` into ``h`` by ``gens[i] -> images[i]``; None on any conflict.

    Walks the Cayley graph of ``<gens>`` and insists on
    ``phi(x * s) == phi(x) * phi(s)`` for every edge, plus injectivity.
    """
    grow, hrow = g.rows, h.rows
    phi = {0: 0}
    used = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            px = phi[x]
            for s, t in zip(gens, images):
                y = grow[x][s]
                z = hrow[px][t]
                seen = phi.get(y)
                if seen is None:
                    if z in used:
                        return None
                    phi[y] = z
                    used.add(z)
                    nxt.append(y)
                elif seen != z:
                    return None
        frontier = nxt
    return phi


def find_isomorphism(g: Group, h: Group) -> Optional[Dict[int, int]]:
    """An explicit isomorphism ``g -> h`` as an index map, or None."""
    if g.order != h.order:
        return None
    gens = _search_generators(g)
    if not gens:
        return {0: 0}
    g_orders, h_orders = g.element_orders, h.element_orders
    g_classes = _class_size_of(g)
    h_classes = _class_size_of(h)
    candidates = [
        [y for y in range(h.order)
         if h_orders[y] == g_orders[s] and h_classes[y] == g_classes[s]]
        for s in gens
    ]

    def search(depth: int, images: List[int]):
        if depth == len(gens):
            phi = _extend_map(g, h, gens, images)
            if phi is not None and len(phi) == g.order:
                return phi
            return None
        for y in candidates[depth]:
            trial = images + [y]
            if depth + 1 < len(gens) and _extend_map(g, h, gens[: depth + 1], trial) is None:
                continue
            found = search(depth + 1, trial)
            if found is not None:
                return found
        return None

    return search(0, [])


def _class_size_of(g: Group):
    cached = g._cache.get("class_size_of")
    if cached is None:
        from .group import conjugacy_classes

        cached = [0] * g.order
        for cls in conjugacy_classes(g):
            for x in cls:
                cached[x] = len(cls)
        g._cache["class_size_of"] = cached
    return cached


def is_isomorphic(g: Group, h: Group, iso_cap: int = DEFAULT_ISO_CAP,
                  lattice_cap: int = DEFAULT_ISO_CAP) -> bool:
    if g.order != h.order:
        return False
    if g.order > iso_cap:
        raise IsomorphismCapExceeded(f"order {g.order} exceeds isomorphism cap {iso_cap}")
    if _cheap_fingerprint(g) != _cheap_fingerprint(h):
        return False
    if _sub_or_none(g, lattice_cap) != _sub_or_none(h, lattice_cap):
        return False
    return find_isomorphism(g, h) is not None
