"""Counting invariants: cyc, sub, order sequences and their domination orders."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .errors import EvenCharacteristic, InternalInconsistency, LatticeCapExceeded, SizeMismatch
from .group import Group, cyclic_subgroups, order_counts
from .lattice import DEFAULT_LATTICE_CAP, DEFAULT_SUBGROUP_CAP, all_subgroups
from .numtheory import (euler_phi, distinct_prime_count, factorize, is_prime,
                        prime_divisors, prime_power_decompose)
from .structure import (is_nilpotent, is_solvable, is_supersolvable, supersolvable_by_peeling,
                        sylow_is_cyclic_or_generalized_quaternion)


@dataclass(frozen=True)
class OrderSequence:
    """Multiset of element orders, kept as ``{order: multiplicity}``."""

    counts: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> "OrderSequence":
        return cls(tuple(sorted((int(k), int(v)) for k, v in counts.items() if v)))

    @classmethod
    def of(cls, group: Group) -> "OrderSequence":
        return cls.from_counts(order_counts(group))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    def expanded(self) -> List[int]:
        """The sorted sequence itself, one entry per element."""
        return [k for k, c in self.counts for _ in range(c)]


def order_sequence(group: Group) -> OrderSequence:
    return OrderSequence.of(group)


def cyclic_order_sequence(*moduli: int) -> OrderSequence:
    """Order sequence of ``Z_m1 x Z_m2 x ...`` computed arithmetically."""
    from math import lcm

    from .numtheory import divisors

    counts = {1: 1}
    for m in moduli:
        nxt: Dict[int, int] = {}
        for d in divisors(m):
            for k, c in counts.items():
                o = lcm(k, d)
                nxt[o] = nxt.get(o, 0) + c * euler_phi(d)
        counts = nxt
    return OrderSequence.from_counts(counts)


def cyc_by_phi_sum(group: Group) -> int:
    """Sum of ``1/phi(o(g))`` over the group, in exact arithmetic."""
    total = Fraction(0)
    for k, c in order_counts(group).items():
        total += Fraction(c, euler_phi(k))
    if total.denominator != 1:
        raise InternalInconsistency(f"{group.name}: phi-sum {total} is not an integer")
    return int(total)


def cyc_by_enumeration(group: Group) -> int:
    return len(cyclic_subgroups(group))


def sub_count(group: Group, lattice_cap: int = DEFAULT_LATTICE_CAP,
              subgroup_cap: int = DEFAULT_SUBGROUP_CAP) -> int:
    return len(all_subgroups(group, lattice_cap=lattice_cap, subgroup_cap=subgroup_cap))


def involution_count(group: Group) -> int:
    return order_counts(group).get(2, 0)


def psl2_involution_formula(q: int) -> int:
    """Involutions in PSL(2,q) for odd ``q``: q(q+1)/2 or q(q-1)/2 by q mod 4."""
    pf = prime_power_decompose(q)
    if pf is None:
        raise ValueError(f"{q} is not a prime power")
    if q % 2 == 0:
        raise EvenCharacteristic(f"q = {q} is even; the count is only given for odd q")
    return q * (q + 1) // 2 if q % 4 == 1 else q * (q - 1) // 2


def predicted_cyc_semidirect(p_t: int, t: int, pi_k: int) -> int:
    """Closed form for cyc(Z_p x| Z_m), m squarefree with t-1 prime factors.

    ``pi_k`` is the number of primes dividing the order of the action.
    """
    if not is_prime(p_t) or p_t == 2:
        raise ValueError(f"p_t must be an odd prime, got {p_t}")
    if t < 2 or not 1 <= pi_k <= t - 1:
        raise ValueError(f"need t >= 2 and 1 <= pi_k <= t-1, got t={t}, pi_k={pi_k}")
    return p_t * 2 ** (t - 1) - (p_t - 2) * 2 ** (t - 1 - pi_k)


def dominates(a: OrderSequence, b: OrderSequence) -> bool:
    """Pointwise comparison of the sorted sequences."""
    if a.total != b.total:
        raise SizeMismatch(f"order sequences of different lengths ({a.total} vs {b.total})")
    # Walk both run-length encodings in step.
    ia = ib = 0
    ra = a.counts[0][1] if a.counts else 0
    rb = b.counts[0][1] if b.counts else 0
    while ia < len(a.counts) and ib < len(b.counts):
        if a.counts[ia][0] < b.counts[ib][0]:
            return False
        step = min(ra, rb)
        ra -= step
        rb -= step
        if ra == 0:
            ia += 1
            ra = a.counts[ia][1] if ia < len(a.counts) else 0
        if rb == 0:
            ib += 1
            rb = b.counts[ib][1] if ib < len(b.counts) else 0
    return True


def strongly_dominates(a: OrderSequence, b: OrderSequence) -> bool:
    """Is there a bijection sending each order-``d`` slot of ``a`` to a slot of ``b`` whose order divides ``d``?

    Decided as an integral max-flow on the order classes: source -> d with
    capacity count_a(d), d -> m when m | d, m -> sink with capacity count_b(m).
    """
    if a.total != b.total:
        raise SizeMismatch(f"order sequences of different lengths ({a.total} vs {b.total})")
    g = nx.DiGraph()
    for d, c in a.counts:
        g.add_edge("s", ("a", d), capacity=c)
        for m, _ in b.counts:
            if d % m == 0:
                g.add_edge(("a", d), ("b", m))
    for m, c in b.counts:
        g.add_edge(("b", m), "t", capacity=c)
    if not g.has_node("s") or not g.has_node("t"):
        return a.total == 0
    value = nx.maximum_flow_value(g, "s", "t")
    return value == a.total


@dataclass
class InvariantRecord:
    name: str
    order: int
    t: Optional[int]
    cyc: int
    sub: Optional[int]
    is_cyclic: bool
    is_abelian: bool
    nilpotent: bool
    supersolvable: bool
    solvable: bool
    sylow_flags: Dict[int, Tuple[bool, bool]]
    order_sequence: Dict[int, int]
    involutions: int
    supersolvable_method: str = "huppert"
    notes: List[str] = field(default_factory=list)
    meta: Dict[str, object] = field(default_factory=dict)

    def to_row(self) -> Dict[str, object]:
        """Flat key/value view for CSV and table output."""
        row = {
            "name": self.name,
            "order": self.order,
            "t": self.t,
            "cyc": self.cyc,
            "sub": self.sub,
            "is_cyclic": self.is_cyclic,
            "nilpotent": self.nilpotent,
            "supersolvable": self.supersolvable,
            "solvable": self.solvable,
            "involutions": self.involutions,
            "sylow_noncyclic": " ".join(str(p) for p, (c, _) in sorted(self.sylow_flags.items()) if not c),
            "sylow_quaternion": " ".join(str(p) for p, (_, q) in sorted(self.sylow_flags.items()) if q),
            "notes": "; ".join(self.notes),
        }
        return row

    def to_dict(self) -> Dict[str, object]:
        d = asdict(self)
        d["sylow_flags"] = {str(p): list(v) for p, v in self.sylow_flags.items()}
        d["order_sequence"] = {str(k): v for k, v in self.order_sequence.items()}
        d["meta"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.meta.items()}
        return d


def invariant_record(group: Group, lattice_cap: int = DEFAULT_LATTICE_CAP,
                     subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
                     sub_max_order: Optional[int] = None) -> InvariantRecord:
    """Bundle every invariant of ``group``.

    cyc is computed twice (phi-sum and enumeration) and a disagreement is a
    hard error.  sub is left as None, with a note, when the lattice is over
    the caps or the group is larger than ``sub_max_order``; supersolvability
    then falls back to the normal-series search, which needs no lattice.
    """
    n = group.order
    notes: List[str] = []
    cyc_phi = cyc_by_phi_sum(group)
    cyc_enum = cyc_by_enumeration(group)
    if cyc_phi != cyc_enum:
        raise InternalInconsistency(f"{group.name}: cyc by phi-sum {cyc_phi} != enumeration {cyc_enum}")
    sub = None
    if sub_max_order is not None and n > sub_max_order:
        notes.append(f"sub skipped: order {n} > {sub_max_order}")
    else:
        try:
            sub = sub_count(group, lattice_cap=lattice_cap, subgroup_cap=subgroup_cap)
        except LatticeCapExceeded as exc:
            notes.append(f"sub skipped: {exc}")
    solvable = is_solvable(group)
    if sub is not None:
        supersolvable = is_supersolvable(group, lattice_cap=lattice_cap, subgroup_cap=subgroup_cap)
        method = "huppert"
    else:
        supersolvable = supersolvable_by_peeling(group)
        method = "normal-series"
    sylow = {p: sylow_is_cyclic_or_generalized_quaternion(group, p) for p in prime_divisors(n)} if n > 1 else {}
    return InvariantRecord(
        name=group.name,
        order=n,
        t=distinct_prime_count(n) if n > 1 else None,
        cyc=cyc_enum,
        sub=sub,
        is_cyclic=group.is_cyclic(),
        is_abelian=group.is_abelian(),
        nilpotent=is_nilpotent(group),
        supersolvable=supersolvable,
        solvable=solvable,
        sylow_flags=sylow,
        order_sequence=order_counts(group),
        involutions=involution_count(group),
        supersolvable_method=method,
        notes=notes,
        meta={k: v for k, v in group.meta.items() if k in ("semidirect", "coprime", "family", "factors")},
    )


def order_exponents(n: int) -> List[int]:
    return [e for _, e in factorize(n)]
