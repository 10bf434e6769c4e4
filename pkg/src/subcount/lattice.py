"""Full subgroup lattice by join-closure from cyclic atoms.

Every subgroup is generated by its cyclic subgroups of prime-power order
(each ``<g>`` is the join of the cyclic subgroups generated by the p-parts
of ``g``).  Starting from all cyclic subgroups, we keep joining subgroups
with prime-power cyclic subgroups they do not contain until nothing new
appears.  Joins are only taken from one representative per conjugacy class;
the rest of each class is filled in by conjugating with the generators,
which is sound because conjugating ``<H, a>`` by ``g`` gives ``<H^g, a^g>``
and ``a^g`` is again an atom.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import LatticeCapExceeded
from .group import (Group, SubgroupSet, _extend, conjugate_subgroup, conjugation_map,
                    cyclic_subgroups, is_normal)
from .numtheory import prime_divisors, prime_power_decompose

DEFAULT_LATTICE_CAP = 2000
DEFAULT_SUBGROUP_CAP = 10**6


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    group: Group
    subgroups: Tuple[SubgroupSet, ...]
    normal: Tuple[bool, ...]
    cyclic: Tuple[bool, ...]
    maximal: Tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __contains__(self, mask: int) -> bool:
        return mask in self._masks

    @property
    def _masks(self) -> Dict[int, int]:
        masks = self.group._cache.get("lattice_masks")
        if masks is None:
            masks = {s.mask: i for i, s in enumerate(self.subgroups)}
            self.group._cache["lattice_masks"] = masks
        return masks

    def index_of(self, mask: int) -> int:
        return self._masks[mask]

    def order_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for s in self.subgroups:
            hist[s.order] = hist.get(s.order, 0) + 1
        return dict(sorted(hist.items()))


def _prime_power_atoms(cyclics: List[SubgroupSet]) -> List[SubgroupSet]:
    return [c for c in cyclics if c.order > 1 and prime_power_decompose(c.order) is not None]


def all_subgroups(group: Group, lattice_cap: int = DEFAULT_LATTICE_CAP,
                  subgroup_cap: int = DEFAULT_SUBGROUP_CAP) -> SubgroupLattice:
    """Every subgroup of ``group`` exactly once, sorted by (size, members).

    Raises :class:`LatticeCapExceeded` when the group is larger than
    ``lattice_cap`` or more than ``subgroup_cap`` subgroups turn up; in the
    latter case ``partial_count`` holds the number found so far.
    """
    cached = group._cache.get("lattice")
    if cached is not None:
        return cached
    if group.order > lattice_cap:
        raise LatticeCapExceeded(
            f"{group.name}: order {group.order} exceeds lattice cap {lattice_cap}")
    cyclics = cyclic_subgroups(group)
    atoms = _prime_power_atoms(cyclics)
    full = group.whole.mask
    n = group.order
    whole_above = n // min(prime_divisors(n)) if n > 1 else None
    cmaps = [conjugation_map(group, g) for g in group.generators]
    known: Dict[int, SubgroupSet] = {}
    reps = deque()

    def add_class(h: SubgroupSet) -> None:
        # Register h and all its conjugates; only h itself is queued.
        known[h.mask] = h
        reps.append(h)
        frontier = [h]
        while frontier:
            nxt = []
            for x in frontier:
                for cmap in cmaps:
                    y = conjugate_subgroup(x, cmap)
                    if y.mask not in known:
                        known[y.mask] = y
                        nxt.append(y)
            frontier = nxt
        if len(known) > subgroup_cap:
            raise LatticeCapExceeded(
                f"{group.name}: more than {subgroup_cap} subgroups", partial_count=len(known))

    for c in cyclics:
        if c.mask not in known:
            add_class(c)
    if full not in known:
        add_class(group.whole)
    while reps:
        h = reps.popleft()
        hm = h.mask
        if hm == full:
            continue
        for a in atoms:
            if a.mask & ~hm == 0:
                continue
            k = _extend(group, h, a.gens[0], whole_above)
            if k.mask not in known:
                add_class(k)
    subs = sorted(known.values(), key=SubgroupSet.sort_key)
    # Prefer the whole group's own generators for the top element.
    subs[-1] = group.whole
    normal = tuple(is_normal(s, group) for s in subs)
    cyclic = tuple(s.is_cyclic() for s in subs)
    maximal = _maximal_flags(subs)
    lattice = SubgroupLattice(group, tuple(subs), normal, cyclic, maximal)
    group._cache["lattice"] = lattice
    return lattice


def _maximal_flags(subs: List[SubgroupSet]) -> Tuple[bool, ...]:
    if len(subs) == 1:
        return (False,)
    proper = subs[:-1]
    flags = []
    for i, h in enumerate(proper):
        hm = h.mask
        contained = any(hm & ~k.mask == 0 for k in proper[i + 1:] if k.order > h.order)
        flags.append(not contained)
    flags.append(False)
    return tuple(flags)


def maximal_subgroups(lattice: SubgroupLattice) -> List[SubgroupSet]:
    return [s for s, m in zip(lattice.subgroups, lattice.maximal) if m]


def sub_count(group: Group, **caps) -> int:
    return len(all_subgroups(group, **caps))
