"""Finite groups as materialized multiplication tables.

A :class:`Group` is an ``n x n`` table of element indices with the identity
at index 0.  Every construction path (permutations, matrices, pairs of
residues) ends in a table, so the algorithms below never care where a group
came from.

Subgroups are :class:`SubgroupSet` values: a bitmask over element indices
plus a generating set.  Subgroup generation uses coset enumeration: the
closure of ``H`` together with new generators is grown one right coset of
``H`` at a time.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import GroupError, InvalidPermutation, OrderCapExceeded

DEFAULT_ORDER_CAP = 20000
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 256
RANDOM_ASSOCIATIVITY_TRIPLES = 10_000
# Above this order the table is not mirrored as nested Python lists.
_ROWS_LIST_LIMIT = 2500


def _mask_from_bool(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    flags = np.zeros(n, dtype=bool)
    flags[np.fromiter(indices, dtype=np.int64)] = True
    return _mask_from_bool(flags)


def indices_from_mask(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n])


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of ``element_i * element_j``.  The object is
    treated as immutable; derived data (orders, cyclic subgroups, lattice)
    is memoised in ``_cache``.
    """

    table: np.ndarray
    inverse: np.ndarray
    name: str
    generators: Tuple[int, ...]
    element_labels: Optional[Tuple[Hashable, ...]] = None
    meta: Dict[str, object] = field(default_factory=dict)
    _cache: Dict[str, object] = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_cache"] = {}
        return state

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)

    @property
    def rows(self):
        """Row-indexable table (nested lists for small groups)."""
        rows = self._cache.get("rows")
        if rows is None:
            rows = self.table.tolist() if self.order <= _ROWS_LIST_LIMIT else self.table
            self._cache["rows"] = rows
        return rows

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, k: int) -> int:
        result, base = 0, i
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def conjugate(self, x: int, g: int) -> int:
        """``g^-1 x g``."""
        rows = self.rows
        return rows[rows[int(self.inverse[g])][x]][g]

    def commutator(self, a: int, b: int) -> int:
        """``a^-1 b^-1 a b``."""
        rows, inv = self.rows, self.inverse
        return rows[rows[rows[int(inv[a])][int(inv[b])]][a]][b]

    def label(self, i: int):
        if self.element_labels is None:
            return i
        return self.element_labels[i]

    # -- cached invariants -------------------------------------------------

    @property
    def element_orders(self) -> np.ndarray:
        orders = self._cache.get("orders")
        if orders is None:
            orders = _element_orders(self.table)
            self._cache["orders"] = orders
        return orders

    @property
    def whole(self) -> "SubgroupSet":
        sub = self._cache.get("whole")
        if sub is None:
            sub = SubgroupSet(self, (1 << self.order) - 1, tuple(self.generators))
            self._cache["whole"] = sub
        return sub

    @property
    def trivial(self) -> "SubgroupSet":
        return SubgroupSet(self, 1, ())

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_cyclic(self) -> bool:
        return bool((self.element_orders == self.order).any())


@dataclass(frozen=True, eq=False)
class SubgroupSet:
    """A subgroup of ``parent``: member bitmask plus a generating set."""

    parent: Group
    mask: int
    gens: Tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        return f"SubgroupSet(order={self.order}, gens={self.gens})"

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(int(i) for i in self.elements)

    @property
    def elements(self) -> np.ndarray:
        return indices_from_mask(self.mask, self.parent.order)

    def sort_key(self):
        return (self.order, self.members)

    def issubset(self, other: "SubgroupSet") -> bool:
        return self.mask & ~other.mask == 0

    def is_cyclic(self) -> bool:
        orders = self.parent.element_orders[self.elements]
        return bool((orders == self.order).any())


# -- construction -----------------------------------------------------------


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    k = 1
    while True:
        hit = (cur == 0) & (orders == 0)
        orders[hit] = k
        if (orders > 0).all():
            return orders
        cur = table[cur, idx]
        k += 1
        if k > n:
            raise GroupError("element order exceeds group order; table is not a group")


def _check_table(table: np.ndarray, seed: int = 0) -> None:
    n = table.shape[0]
    if table.shape != (n, n):
        raise GroupError("table must be square")
    if n == 0:
        raise GroupError("empty table")
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entries out of range")
    idx = np.arange(n)
    if not (np.array_equal(table[0], idx) and np.array_equal(table[:, 0], idx)):
        raise GroupError("index 0 is not a two-sided identity")
    if not (np.sort(table, axis=1) == idx).all() or not (np.sort(table, axis=0) == idx[:, None]).all():
        raise GroupError("table is not a Latin square")
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            if not np.array_equal(table[table[a]], table[a][table]):
                raise GroupError("table is not associative")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, RANDOM_ASSOCIATIVITY_TRIPLES))
        if not np.array_equal(table[table[a, b], c], table[a, table[b, c]]):
            raise GroupError("table is not associative")


def group_from_table(table, name: str, generators: Optional[Sequence[int]] = None,
                     element_labels=None, meta=None, check: bool = True) -> Group:
    table = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
    if check:
        _check_table(table)
    inverse = np.argmax(table == 0, axis=1).astype(np.int32)
    if generators is None:
        generators = small_generating_set(table, _element_orders(table))
    return Group(
        table=table,
        inverse=inverse,
        name=name,
        generators=tuple(int(g) for g in generators),
        element_labels=tuple(element_labels) if element_labels is not None else None,
        meta=dict(meta or {}),
    )


def group_from_elements(identity: Hashable, generators: Sequence[Hashable],
                        mul: Callable[[Hashable, Hashable], Hashable], name: str,
                        order_cap: int = DEFAULT_ORDER_CAP, meta=None, check: bool = True) -> Group:
    """Close ``generators`` under ``mul`` and return the multiplication table.

    Elements are discovered breadth-first from ``identity`` by right
    multiplication with the generators, so element 0 is the identity and the
    numbering is deterministic.  Only ``n * len(generators)`` calls to ``mul``
    are made; the full table is filled in from the spanning tree.
    """
    elements = [identity]
    index = {identity: 0}
    parent = [-1]
    via = [-1]
    gens = [g for g in generators]
    right = [[] for _ in gens]
    i = 0
    while i < len(elements):
        x = elements[i]
        for s, g in enumerate(gens):
            y = mul(x, g)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= order_cap:
                    raise OrderCapExceeded(order_cap, j + 1)
                index[y] = j
                elements.append(y)
                parent.append(i)
                via.append(s)
            right[s].append(j)
        i += 1
    n = len(elements)
    right_arr = [np.asarray(r, dtype=np.int32) for r in right]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    for j in range(1, n):
        table[:, j] = right_arr[via[j]][table[:, parent[j]]]
    gen_idx = [index[g] for g in gens]
    return group_from_table(table, name, generators=[g for g in gen_idx if g != 0],
                            element_labels=elements, meta=meta, check=check)


def _check_permutation(p: Sequence[int], degree: int) -> Tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise InvalidPermutation(f"{list(p)} is not a permutation of 0..{degree - 1}")
    return p


def compose(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """Apply ``a`` then ``b``."""
    return tuple(b[x] for x in a)


def group_from_generators(degree: int, generators: Sequence[Sequence[int]], name: str,
                          order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    if degree < 0:
        raise InvalidPermutation("degree must be non-negative")
    perms = [_check_permutation(g, degree) for g in generators]
    identity = tuple(range(degree))
    return group_from_elements(identity, perms, compose, name, order_cap=order_cap,
                               meta={"degree": degree})


def small_generating_set(table: np.ndarray, orders: np.ndarray) -> List[int]:
    """Greedy generating set: repeatedly add the highest-order element not yet covered."""
    n = table.shape[0]
    order_rank = sorted(range(n), key=lambda i: (-int(orders[i]), i))
    gens: List[int] = []
    covered = np.zeros(n, dtype=bool)
    covered[0] = True
    base = np.array([0])
    for g in order_rank:
        if covered.all():
            break
        if covered[g]:
            continue
        gens.append(g)
        covered = _closure_flags(table, base, covered, [g] + gens[:-1])
        base = np.flatnonzero(covered)
    return gens


# -- subgroup generation ----------------------------------------------------


def _closure_flags(table, base: np.ndarray, base_flags: np.ndarray, gens: Sequence[int],
                   whole_above: Optional[int] = None) -> Optional[np.ndarray]:
    """Membership flags of the subgroup generated by a subgroup ``base`` and ``gens``.

    ``base`` must already be a subgroup and ``gens`` must generate a group
    containing it.  The result is built as a union of right cosets
    ``base * y``, closed under right multiplication by ``gens``.  If
    ``whole_above`` is given and the running size exceeds it, None is
    returned: the caller knows the closure must be the whole group.
    """
    flags = base_flags.copy()
    reps = [0]
    size = len(base)
    i = 0
    while i < len(reps):
        row = table[reps[i]]
        i += 1
        for s in gens:
            y = row[s]
            if not flags[y]:
                flags[table[base, y]] = True
                reps.append(int(y))
                size += len(base)
                if whole_above is not None and size > whole_above:
                    return None
    return flags


def _extend(group: Group, base: SubgroupSet, g: int, whole_above: Optional[int] = None) -> SubgroupSet:
    base_elems = base.elements
    flags = np.zeros(group.order, dtype=bool)
    flags[base_elems] = True
    flags = _closure_flags(group.table, base_elems, flags, (g,) + base.gens, whole_above)
    if flags is None:
        return group.whole
    return SubgroupSet(group, _mask_from_bool(flags), base.gens + (g,))


def conjugation_map(group: Group, g: int) -> np.ndarray:
    """Array sending each ``x`` to ``g^-1 x g``."""
    gi = int(group.inverse[g])
    return group.table[group.table[gi], g]


def conjugate_subgroup(h: SubgroupSet, cmap: np.ndarray) -> SubgroupSet:
    group = h.parent
    flags = np.zeros(group.order, dtype=bool)
    flags[cmap[h.elements]] = True
    return SubgroupSet(group, _mask_from_bool(flags), tuple(int(cmap[x]) for x in h.gens))


def generate(group: Group, gens: Sequence[int], base: Optional[SubgroupSet] = None) -> SubgroupSet:
    """Subgroup generated by ``base`` (default trivial) together with ``gens``."""
    cur = group.trivial if base is None else base
    for g in gens:
        g = int(g)
        if not (cur.mask >> g & 1):
            cur = _extend(group, cur, g)
    return cur


def join(a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
    if b.issubset(a):
        return a
    if a.issubset(b):
        return b
    return generate(a.parent, b.gens, base=a)


def intersection(a: SubgroupSet, b: SubgroupSet) -> int:
    """Member mask of ``a & b`` (generators are not computed)."""
    return a.mask & b.mask


def subgroup_from_mask(group: Group, mask: int) -> SubgroupSet:
    elems = indices_from_mask(mask, group.order)
    sub = group.trivial
    for g in elems:
        g = int(g)
        if not (sub.mask >> g & 1):
            sub = generate(group, [g], sub)
    if sub.mask != mask:
        raise GroupError("mask is not a subgroup")
    return sub


def cyclic_subgroup(group: Group, g: int) -> SubgroupSet:
    rows = group.rows
    powers = [0]
    x = g
    while x != 0:
        powers.append(x)
        x = rows[x][g]
    return SubgroupSet(group, mask_from_indices(powers, group.order), (g,) if g else ())


# -- element-level invariants -----------------------------------------------


def element_order(group: Group, i: int) -> int:
    return int(group.element_orders[i])


def order_counts(group: Group) -> Dict[int, int]:
    values, counts = np.unique(group.element_orders, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def cyclic_subgroups(group: Group) -> List[SubgroupSet]:
    """All distinct subgroups ``<g>``, sorted by (size, members)."""
    cached = group._cache.get("cyclic")
    if cached is not None:
        return list(cached)
    n = group.order
    rows = group.rows
    done = np.zeros(n, dtype=bool)
    subs = []
    for g in range(n):
        if done[g]:
            continue
        powers = [0]
        x = g
        while x != 0:
            powers.append(x)
            x = rows[x][g]
        k = len(powers)
        for e in range(1, k) if k > 1 else ():
            if math.gcd(e, k) == 1:
                done[powers[e]] = True
        done[g] = True
        subs.append(SubgroupSet(group, mask_from_indices(powers, n), (g,) if g else ()))
    subs.sort(key=SubgroupSet.sort_key)
    group._cache["cyclic"] = tuple(subs)
    return subs


def conjugacy_classes(group: Group) -> List[List[int]]:
    n = group.order
    maps = []
    for g in group.generators:
        gi = int(group.inverse[g])
        maps.append(group.table[group.table[gi], g].tolist())
    label = [-1] * n
    classes = []
    for start in range(n):
        if label[start] >= 0:
            continue
        cid = len(classes)
        label[start] = cid
        members = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for m in maps:
                y = m[x]
                if label[y] < 0:
                    label[y] = cid
                    members.append(y)
                    queue.append(y)
        classes.append(sorted(members))
    return classes


def class_size_multiset(group: Group) -> Tuple[int, ...]:
    cached = group._cache.get("class_sizes")
    if cached is None:
        cached = tuple(sorted(len(c) for c in conjugacy_classes(group)))
        group._cache["class_sizes"] = cached
    return cached


def is_normal(h: SubgroupSet, group: Optional[Group] = None) -> bool:
    """True iff ``g^-1 H g = H`` for every generator ``g`` of the parent group."""
    group = group or h.parent
    for g in group.generators:
        for x in h.gens:
            if not (h.mask >> group.conjugate(x, g) & 1):
                return False
    return True


def normalizes(group: Group, g: int, h: SubgroupSet) -> bool:
    return all(h.mask >> group.conjugate(x, g) & 1 for x in h.gens)


def normal_closure(group: Group, seeds: Iterable[int], within: Optional[SubgroupSet] = None) -> SubgroupSet:
    """Smallest subgroup containing ``seeds`` that is normalised by ``within`` (default: the group)."""
    within = within or group.whole
    n_sub = generate(group, list(seeds))
    changed = True
    while changed:
        changed = False
        for g in within.gens:
            for x in n_sub.gens:
                c = group.conjugate(x, g)
                if not (n_sub.mask >> c & 1):
                    n_sub = generate(group, [c], n_sub)
                    changed = True
    return n_sub
