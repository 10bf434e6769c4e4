"""Executable checks of the cyc/sub criteria over a bounded corpus of groups.

Each check returns a :class:`VerdictReport`.  Status is ``fail`` iff some
group violates the check, ``vacuous`` iff no group met the hypothesis, and
``pass`` otherwise.  Thresholds that become fractional for small ``t`` are
compared as exact rationals.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import constructors as c
from .dsl import group_from_spec
from .errors import GroupError
from .group import Group
from .invariants import (InvariantRecord, OrderSequence, cyc_by_enumeration, cyc_by_phi_sum,
                         cyclic_order_sequence, invariant_record, involution_count,
                         predicted_cyc_semidirect, psl2_involution_formula, strongly_dominates,
                         sub_count)
from .lattice import DEFAULT_LATTICE_CAP, DEFAULT_SUBGROUP_CAP
from .loader import load_group_file
from .numtheory import (distinct_prime_count, divisor_count, factorize, is_prime, is_squarefree,
                        multiplicative_order, prime_divisors, prime_power_decompose, primes_above)
from .structure import is_nilpotent, is_solvable, is_supersolvable

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"

WITNESS_KINDS = ("NILP_CYC", "NILP_SUB", "SUPER_CYC", "SUPER_SUB", "SOLV_SUB")


@dataclass
class VerdictReport:
    check_id: str
    status: str
    groups_checked: int
    violations: List[Dict[str, object]] = field(default_factory=list)
    notes: str = ""

    def to_dict(self) -> Dict[str, object]:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "groups_checked": self.groups_checked,
            "violations": [dict(v) for v in self.violations],
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d) -> "VerdictReport":
        return cls(d["check_id"], d["status"], int(d["groups_checked"]), list(d["violations"]), d["notes"])


def _verdict(check_id: str, checked: int, hits: int, violations, notes: Sequence[str] = ()) -> VerdictReport:
    if violations:
        status = FAIL
    elif hits == 0:
        status = VACUOUS
    else:
        status = PASS
    notes = [f"hypothesis met by {hits}"] + list(notes)
    return VerdictReport(check_id, status, checked, list(violations), "; ".join(notes))


# -- corpus -----------------------------------------------------------------


@dataclass
class CorpusConfig:
    max_order: int = 660
    include_squarefree_enumeration: bool = True
    squarefree_max_order: int = 300
    spec_list: Tuple[str, ...] = ()
    ingest_paths: Tuple[str, ...] = ()
    psl_q_max: int = 0
    witness_t_range: Tuple[int, int] = (2, 4)
    lattice_cap: int = DEFAULT_LATTICE_CAP
    iso_cap: int = 2000
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    sub_max_order: int = 500


def default_corpus_config(**overrides) -> CorpusConfig:
    """Families up to order 660, squarefree orders up to 300, PSL(2,q) for q <= 13."""
    params = dict(max_order=660, psl_q_max=13)
    params.update(overrides)
    return CorpusConfig(**params)


FAMILY_SPECS = (
    [f"Z({n})" for n in range(1, 65)]
    + ["Z(2) x Z(2)", "Z(2) x Z(4)", "Z(2) x Z(2) x Z(2)", "Z(3) x Z(3)", "Z(2) x Z(6)",
       "Z(4) x Z(4)", "Z(2) x Z(8)", "Z(3) x Z(9)", "Z(2) x Z(2) x Z(3) x Z(5)", "Z(5) x Z(5)",
       "Z(2) x Z(2) x Z(2) x Z(2)", "Z(6) x Z(6)", "Z(2) x Z(10) x Z(7)"]
    + [f"D({n})" for n in range(2, 51)]
    + [f"Q({2**k})" for k in range(3, 7)]
    + [f"S({n})" for n in range(2, 7)]
    + [f"A({n})" for n in range(3, 7)]
    + ["SL(2,3)", "SL(2,5)", "SL(2,7)"]
    + ["SD(9,2,8)", "SD(8,2,3)", "SD(8,2,5)", "SD(16,2,7)", "SD(3,4,2)", "SD(5,4,2)",
       "SD(7,6,3)", "SD(11,10,2)", "SD(13,12,2)", "SD(9,6,2)", "SD(7,9,2)", "SD(13,4,5)",
       "SD(5,8,2)", "SD(7,3,2)", "SD(5,6,4)", "SD(9,4,8)", "SD(19,9,4)", "SD(3,8,2)",
       "SD(25,4,7)", "SD(7,12,3)", "SD(31,5,2)", "SD(27,2,26)"]
    + ["S(3) x Z(5)", "S(3) x S(3)", "S(3) x Z(3)", "S(3) x Z(4)", "S(3) x Z(2) x Z(2)",
       "A(4) x Z(2)", "A(4) x Z(3)", "A(4) x Z(5)", "A(4) x Z(7)", "A(4) x A(4)",
       "S(4) x Z(2)", "S(4) x Z(3)", "S(4) x Z(5)", "Q(8) x Z(3)", "Q(8) x Z(5)",
       "Q(8) x Z(2)", "D(4) x Z(3)", "D(4) x Z(5)", "SL(2,3) x Z(5)", "SL(2,3) x Z(2)",
       "A(5) x Z(2)", "A(5) x Z(3)", "A(5) x Z(7)", "SD(7,3,2) x Z(2)", "SD(7,3,2) x Z(5)",
       "SD(5,4,2) x Z(3)", "S(3) x Z(5) x Z(7)", "A(4) x Z(5) x Z(7)", "S(3) x D(5)",
       "PSL(2,7) x Z(2)", "A(5) x Z(4)", "S(5) x Z(3)", "S(3) x Q(8)", "S(3) x S(3) x Z(5)"]
)


def _odd_or_any_prime_powers(lo: int, hi: int) -> List[int]:
    return [q for q in range(lo, hi + 1) if prime_power_decompose(q) is not None]


@dataclass
class Corpus:
    groups: List[Group]
    errors: List[Tuple[str, str]] = field(default_factory=list)


def _spec_order_estimate(spec: str) -> Optional[int]:
    """Cheap upper bound on the order of a spec, to skip building huge groups."""
    from .dsl import Atom, Product, parse_group_spec

    def size(a: Atom) -> int:
        k, args = a.kind, a.args
        if k in ("Z", "Q"):
            return args[0]
        if k == "D":
            return 2 * args[0]
        if k == "S":
            return math.factorial(args[0])
        if k == "A":
            return max(1, math.factorial(args[0]) // 2)
        if k in ("SL", "PSL"):
            q = args[1]
            return q * (q * q - 1)
        if k == "SD":
            return args[0] * args[1]
        return 0

    ast = parse_group_spec(spec)
    factors = ast.factors if isinstance(ast, Product) else (ast,)
    return math.prod(size(f) for f in factors)


def build_corpus(cfg: CorpusConfig) -> Corpus:
    """Groups for the checks, sorted by (order, name); per-group failures are collected."""
    groups: Dict[str, Group] = {}
    errors: List[Tuple[str, str]] = []

    def add(source: str, make, limit: Optional[int]):
        try:
            g = make()
        except (GroupError, ValueError) as exc:
            errors.append((source, str(exc)))
            return
        if limit is not None and g.order > limit:
            return
        groups.setdefault(g.name, g)

    for spec in FAMILY_SPECS:
        est = _spec_order_estimate(spec)
        if est is not None and est > 2 * cfg.max_order and spec.split("(")[0] not in ("PSL",):
            continue
        add(spec, lambda s=spec: group_from_spec(s), cfg.max_order)
    lo, hi = cfg.witness_t_range
    for t in range(lo, hi + 1):
        for kind in WITNESS_KINDS:
            if kind == "SOLV_SUB" and t < 3:
                continue
            spec = witness_spec(t, kind)
            if _spec_order_estimate(spec) <= cfg.max_order:
                add(spec, lambda s=spec: group_from_spec(s), cfg.max_order)
    for q in _odd_or_any_prime_powers(3, cfg.psl_q_max):
        add(f"PSL(2,{q})", lambda q=q: c.psl2(q), None)
    for spec in cfg.spec_list:
        add(spec, lambda s=spec: group_from_spec(s), None)
    for path in cfg.ingest_paths:
        add(str(path), lambda p=path: load_group_file(p), None)
    if cfg.include_squarefree_enumeration:
        for n in range(1, min(cfg.max_order, cfg.squarefree_max_order) + 1):
            if is_squarefree(n):
                try:
                    for g in c.squarefree_groups(n, iso_cap=cfg.iso_cap):
                        groups.setdefault(g.name, g)
                except GroupError as exc:
                    errors.append((f"squarefree {n}", str(exc)))
    ordered = sorted(groups.values(), key=lambda g: (g.order, g.name))
    return Corpus(ordered, errors)


def _record_job(args) -> InvariantRecord:
    group, lattice_cap, subgroup_cap, sub_max_order = args
    return invariant_record(group, lattice_cap=lattice_cap, subgroup_cap=subgroup_cap,
                            sub_max_order=sub_max_order)


@dataclass
class Entry:
    group: Group
    record: InvariantRecord


def compute_entries(corpus: Corpus, cfg: CorpusConfig, jobs: int = 1) -> List[Entry]:
    """Invariant records for every corpus group, in corpus order regardless of ``jobs``."""
    sub_max = min(cfg.sub_max_order, cfg.lattice_cap)
    args = [(g, cfg.lattice_cap, cfg.subgroup_cap, sub_max) for g in corpus.groups]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_record_job, args, chunksize=4))
    else:
        records = [_record_job(a) for a in args]
    return [Entry(g, r) for g, r in zip(corpus.groups, records)]


# -- checks -----------------------------------------------------------------


def _bound(coef: int, exp: int) -> Fraction:
    return Fraction(coef) * Fraction(2) ** exp


def _fmt(x) -> str:
    return str(x) if not isinstance(x, Fraction) or x.denominator != 1 else str(x.numerator)


def _os(rec: InvariantRecord) -> OrderSequence:
    return OrderSequence.from_counts(rec.order_sequence)


def check_richards(entries: Sequence[Entry]) -> VerdictReport:
    """cyc(G) >= d(|G|), with equality exactly for cyclic G."""
    violations = []
    for e in entries:
        r = e.record
        d = divisor_count(r.order)
        if r.cyc < d or (r.cyc == d) != r.is_cyclic:
            violations.append({"group": r.name, "cyc": r.cyc, "d(|G|)": d, "is_cyclic": r.is_cyclic})
    nontrivial = sum(e.record.order > 1 for e in entries)
    return _verdict("THM-2.2", len(entries), nontrivial, violations)


def check_product_inequality(entries: Sequence[Entry], max_factor_order: int = 24,
                             max_product_order: int = 400) -> VerdictReport:
    """cyc(G x H) >= cyc(G) cyc(H) over corpus pairs; equality when the orders are coprime."""
    small = [e for e in entries if 1 < e.group.order <= max_factor_order]
    violations = []
    checked = coprime = 0
    for a, b in itertools.combinations_with_replacement(small, 2):
        if a.group.order * b.group.order > max_product_order:
            continue
        prod = c.direct_product(a.group, b.group)
        lhs = cyc_by_phi_sum(prod)
        rhs = a.record.cyc * b.record.cyc
        checked += 1
        is_coprime = math.gcd(a.group.order, b.group.order) == 1
        coprime += is_coprime
        if lhs < rhs or (is_coprime and lhs != rhs):
            violations.append({"group": prod.name, "cyc(GxH)": lhs, "cyc(G)cyc(H)": rhs,
                               "coprime": is_coprime})
    return _verdict("THM-2.3", checked, checked, violations, [f"coprime pairs {coprime}"])


def check_sylow_domination(entries: Sequence[Entry]) -> VerdictReport:
    """Non-cyclic, non-quaternion Sylow p: os(Z_{n/p} x Z_p) strongly dominates os(G)."""
    violations = []
    hits = 0
    for e in entries:
        r = e.record
        for p, (cyclic, quaternion) in sorted(r.sylow_flags.items()):
            if cyclic or quaternion:
                continue
            hits += 1
            target = cyclic_order_sequence(r.order // p, p)
            if not strongly_dominates(target, _os(r)):
                violations.append({"group": r.name, "p": p})
    return _verdict("THM-2.6", len(entries), hits, violations)


def check_extension_domination(entries: Sequence[Entry]) -> VerdictReport:
    """Coprime Z_a x| Z_b: os(Z_a x Z_b) strongly dominates it, so d(ab) <= cyc."""
    violations = []
    hits = 0
    for e in entries:
        sd = e.group.meta.get("semidirect")
        if not sd or not e.group.meta.get("coprime"):
            continue
        a, b, _ = sd
        hits += 1
        r = e.record
        d = divisor_count(a * b)
        dom = strongly_dominates(cyclic_order_sequence(a, b), _os(r))
        if d > r.cyc or not dom:
            violations.append({"group": r.name, "d(ab)": d, "cyc": r.cyc, "strongly_dominated": dom})
    return _verdict("THM-2.7", len(entries), hits, violations)


def check_domination_cyc(entries: Sequence[Entry]) -> VerdictReport:
    """Same-order pairs: strong domination of os(G) over os(H) forces cyc(G) <= cyc(H)."""
    by_order = defaultdict(list)
    for e in entries:
        by_order[e.record.order].append(e.record)
    violations = []
    pairs = hits = 0
    for recs in by_order.values():
        for x, y in itertools.permutations(recs, 2):
            pairs += 1
            if strongly_dominates(_os(x), _os(y)):
                hits += 1
                if x.cyc > y.cyc:
                    violations.append({"group": f"{x.name} over {y.name}", "cyc(G)": x.cyc, "cyc(H)": y.cyc})
    return _verdict("LEM-2.5", len(entries), hits, violations, [f"ordered same-order pairs {pairs}"])


def _criterion(check_id: str, entries: Sequence[Entry], invariant: str, coef: int, shift: int,
               prop: str, t_min: int = 1) -> VerdictReport:
    """Generic ``invariant(G) < coef * 2^(t + shift)  =>  prop(G)`` check."""
    violations = []
    hits = checked = 0
    skipped_sub = small_t = 0
    for e in entries:
        r = e.record
        if r.t is None:
            continue
        value = getattr(r, invariant)
        if value is None:
            skipped_sub += 1
            continue
        if r.t < t_min:
            small_t += 1
            if not getattr(r, prop):
                violations.append({"group": r.name, "t": r.t, invariant: value, prop: False})
            continue
        checked += 1
        bound = _bound(coef, r.t + shift)
        if value < bound:
            hits += 1
            if not getattr(r, prop):
                violations.append({"group": r.name, "t": r.t, invariant: value, "bound": _fmt(bound),
                                   prop: False})
    notes = []
    if skipped_sub:
        notes.append(f"{skipped_sub} groups without {invariant} skipped")
    if t_min > 1:
        notes.append(f"t < {t_min} handled separately: {small_t} groups, all {prop}"
                     if not any(v.get("t", t_min) < t_min for v in violations)
                     else f"t < {t_min}: {small_t} groups")
    return _verdict(check_id, checked, hits, violations, notes)


def check_nilpotency_cyc(entries):
    """cyc(G) < 5 * 2^(t-2) forces nilpotency; t = 1 groups are reported apart."""
    return _criterion("THM-3.1", entries, "cyc", 5, -2, "nilpotent", t_min=2)


def check_nilpotency_sub(entries):
    """sub(G) < 6 * 2^(t-2) forces nilpotency.

    Also requires every non-cyclic group to have cyc >= 5 * 2^(t-2) and
    sub >= 6 * 2^(t-2).
    """
    report = _criterion("THM-3.2", entries, "sub", 6, -2, "nilpotent", t_min=2)
    extra = []
    noncyclic = 0
    for e in entries:
        r = e.record
        if r.t is None or r.is_cyclic:
            continue
        noncyclic += 1
        if r.cyc < _bound(5, r.t - 2) or (r.sub is not None and r.sub < _bound(6, r.t - 2)):
            extra.append({"group": r.name, "t": r.t, "cyc": r.cyc, "sub": r.sub,
                          "rule": "non-cyclic lower bounds"})
    if extra:
        report.violations.extend(extra)
        report.status = FAIL
    report.notes += f"; non-cyclic lower bounds checked on {noncyclic}"
    return report


def check_supersolvable_divisor_criterion(entries: Sequence[Entry]) -> VerdictReport:
    """No quaternion Sylow and cyc < d(|G|) * min over r_i > 1 of 2 r_i/(r_i+1): supersolvable."""
    violations = []
    hits = checked = 0
    for e in entries:
        r = e.record
        if r.order == 1:
            continue
        exps = [x for _, x in factorize(r.order) if x > 1]
        if not exps:
            continue
        if any(q for _, q in r.sylow_flags.values()):
            continue
        checked += 1
        bound = divisor_count(r.order) * min(Fraction(2 * x, x + 1) for x in exps)
        if r.cyc < bound:
            hits += 1
            if not r.supersolvable:
                violations.append({"group": r.name, "cyc": r.cyc, "bound": _fmt(bound),
                                   "supersolvable": False})
    return _verdict("THM-4.1", checked, hits, violations)


def check_supersolvable_cyc(entries):
    return _criterion("THM-4.2", entries, "cyc", 1, 1, "supersolvable")


def check_supersolvable_sub(entries):
    return _criterion("THM-4.5", entries, "sub", 5, -1, "supersolvable")


def check_solvable_sub(entries):
    return _criterion("THM-5.3", entries, "sub", 59, -3, "solvable")


def conjecture_near_misses(entries: Sequence[Entry]) -> List[Dict[str, object]]:
    out = []
    for e in entries:
        r = e.record
        if r.t is not None and not r.solvable and r.cyc == 2 ** (r.t + 2):
            out.append({"group": r.name, "t": r.t, "cyc": r.cyc, "bound": 2 ** (r.t + 2)})
    return out


def scan_conjecture(entries: Sequence[Entry]) -> VerdictReport:
    """Look for non-solvable groups with cyc < 2^(t+2); also list those with equality."""
    violations = []
    hits = nonsolvable = 0
    for e in entries:
        r = e.record
        if r.t is None:
            continue
        nonsolvable += not r.solvable
        if r.cyc < 2 ** (r.t + 2):
            hits += 1
            if not r.solvable:
                violations.append({"group": r.name, "t": r.t, "cyc": r.cyc, "bound": 2 ** (r.t + 2)})
    near = conjecture_near_misses(entries)
    notes = [f"non-solvable groups scanned {nonsolvable}"]
    if nonsolvable == 0:
        notes.append("no non-solvable group in corpus")
    notes.append("near-misses: " + (", ".join(f"{m['group']} (cyc {m['cyc']} = 2^{m['t'] + 2})" for m in near)
                                    if near else "none"))
    report = _verdict("CONJ-5.4", len([e for e in entries if e.record.t is not None]), hits, violations, notes)
    return report


# -- sharpness witnesses ----------------------------------------------------


def witness_spec(t: int, kind: str) -> str:
    """Group spec of the extremal example for ``kind`` with ``t`` prime divisors."""
    if kind not in WITNESS_KINDS:
        raise ValueError(f"unknown witness kind {kind!r}")
    if kind == "SOLV_SUB":
        if t < 3:
            raise ValueError("SOLV_SUB needs t >= 3")
        base, extra, lower = "A(5)", t - 3, 5
    elif kind.startswith("NILP"):
        if t < 2:
            raise ValueError(f"{kind} needs t >= 2")
        base, extra, lower = "S(3)", t - 2, 3
    else:
        if t < 2:
            raise ValueError(f"{kind} needs t >= 2")
        base, extra, lower = "A(4)", t - 2, 3
    return " x ".join([base] + [f"Z({p})" for p in primes_above(lower, extra)])


def witness_expected(t: int, kind: str) -> int:
    return {
        "NILP_CYC": 5 * 2 ** (t - 2),
        "NILP_SUB": 6 * 2 ** (t - 2),
        "SUPER_CYC": 2 ** (t + 1),
        "SUPER_SUB": 5 * 2 ** (t - 1),
        "SOLV_SUB": 59 * 2 ** (t - 3),
    }[kind]


def sharpness_witness(t: int, kind: str) -> Tuple[Group, int]:
    return group_from_spec(witness_spec(t, kind)), witness_expected(t, kind)


def witness_values(group: Group, kind: str) -> Tuple[int, bool]:
    value = cyc_by_enumeration(group) if kind.endswith("CYC") else sub_count(group)
    if kind.startswith("NILP"):
        prop = is_nilpotent(group)
    elif kind.startswith("SUPER"):
        prop = is_supersolvable(group)
    else:
        prop = is_solvable(group)
    return value, prop


def check_sharpness(t_values: Iterable[int] = (2, 3, 4)) -> VerdictReport:
    """Each witness attains its bound exactly and lacks the property."""
    violations = []
    notes = []
    checked = 0
    for t in t_values:
        for kind in WITNESS_KINDS:
            if kind == "SOLV_SUB" and t < 3:
                continue
            group, expected = sharpness_witness(t, kind)
            value, prop = witness_values(group, kind)
            checked += 1
            distinct_t = distinct_prime_count(group.order)
            notes.append(f"{kind} t={t} {group.name}: {value}")
            if value != expected or prop or distinct_t != t:
                violations.append({"group": group.name, "kind": kind, "t": t, "computed": value,
                                   "expected": expected, "has_property": prop})
    return _verdict("SHARPNESS", checked, checked, violations, notes)


# -- lemmas and closed forms --------------------------------------------------


def verify_involution_lemma(q_list: Iterable[int] = (3, 5, 7, 9, 11, 13)) -> VerdictReport:
    violations = []
    notes = []
    qs = list(q_list)
    for q in qs:
        count = involution_count(c.psl2(q))
        formula = psl2_involution_formula(q)
        notes.append(f"q={q}: {count}")
        if count != formula:
            violations.append({"group": f"PSL(2,{q})", "computed": count, "formula": formula})
    return _verdict("LEM-2.8", len(qs), len(qs), violations, notes)


def _pi_of_psl_order(q: int) -> int:
    primes = set(prime_divisors(q)) | set(prime_divisors(q - 1)) | set(prime_divisors(q + 1))
    return len(primes)


def verify_prime_inequalities(q_max: int = 10**4) -> VerdictReport:
    """For odd prime powers q, N = q(q^2-1)/2, t = pi(N):
    q >= 7 gives q(q-1) >= 5 * 2^t and q >= 37 gives q(q-1) >= 59 * 2^(t-1);
    t >= 3 is required wherever an inequality is checked.
    """
    violations = []
    hits = 0
    qs = [q for q in range(3, q_max + 1, 2) if prime_power_decompose(q) is not None]
    small = []
    for q in qs:
        t = _pi_of_psl_order(q)
        lhs = q * (q - 1)
        if q < 7:
            small.append(f"q={q}: t={t}")
            continue
        hits += 1
        row = {"q": q, "t": t, "q(q-1)": lhs}
        if t < 3:
            violations.append(dict(row, rule="t >= 3"))
        if lhs < 5 * 2**t:
            violations.append(dict(row, rule="q(q-1) >= 5*2^t", bound=5 * 2**t))
        if q >= 37 and lhs < 59 * 2 ** (t - 1):
            violations.append(dict(row, rule="q(q-1) >= 59*2^(t-1)", bound=59 * 2 ** (t - 1)))
    return _verdict("LEM-2.9", len(qs), hits, violations, ["below 7 (not checked): " + ", ".join(small)])


def eq31_instances(max_order: int = 500) -> List[Tuple[int, int, int]]:
    """(p, m, r): p an odd prime larger than every prime of squarefree m, r of order > 1 with r^m = 1 mod p."""
    out = []
    for p in range(3, max_order + 1):
        if not is_prime(p):
            continue
        for m in range(2, max_order // p + 1):
            if not is_squarefree(m) or max(prime_divisors(m)) >= p:
                continue
            for r in range(2, p):
                if pow(r, m, p) == 1:
                    out.append((p, m, r))
    return out


def verify_eq31(max_order: int = 500) -> VerdictReport:
    """Closed-form cyc of Z_p x| Z_m against enumeration, plus cyc / 2^(t-1) >= 5/2."""
    violations = []
    instances = eq31_instances(max_order)
    for p, m, r in instances:
        g = c.semidirect_cyclic(c.SemidirectSpec(p, m, r))
        t = distinct_prime_count(p * m)
        k = multiplicative_order(r, p)
        predicted = predicted_cyc_semidirect(p, t, len(prime_divisors(k)))
        computed = cyc_by_enumeration(g)
        ratio = Fraction(computed, 2 ** (t - 1))
        if computed != predicted or ratio < Fraction(5, 2):
            violations.append({"group": g.name, "computed": computed, "predicted": predicted,
                               "ratio": _fmt(ratio)})
    return _verdict("EQ-3.1", len(instances), len(instances), violations)


# -- errata -------------------------------------------------------------------


@dataclass
class ClaimResult:
    claim_id: str
    statement: str
    claimed: Dict[str, int]
    computed: Dict[str, int]
    note: str = ""

    @property
    def agrees(self) -> bool:
        return self.claimed == self.computed


def errata_claims(t_values: Iterable[int] = (2, 3, 4)) -> List[ClaimResult]:
    """Numeric claims from the source text, each paired with the computed value."""
    s3, a4, a5 = c.symmetric(3), c.alternating(4), c.alternating(5)
    p3, p5 = c.psl2(3), c.psl2(5)
    claims = [
        ClaimResult("cyc-S3", "cyc(S3) = 5", {"S(3)": 5}, {"S(3)": cyc_by_enumeration(s3)}),
        ClaimResult("sub-S3", "sub(S3) = 6", {"S(3)": 6}, {"S(3)": sub_count(s3)}),
        ClaimResult("cyc-A4", "cyc(A4) = 8", {"A(4)": 8}, {"A(4)": cyc_by_enumeration(a4)}),
        ClaimResult("sub-A4", "sub(A4) = 10", {"A(4)": 10}, {"A(4)": sub_count(a4)}),
        ClaimResult("sub-A5", "sub(A5) = 59", {"A(5)": 59}, {"A(5)": sub_count(a5)}),
        ClaimResult(
            "cyc-PSL-small", "cyc(PSL(2,3)) = 10 and cyc(PSL(2,5)) = 59",
            {"PSL(2,3)": 10, "PSL(2,5)": 59},
            {"PSL(2,3)": cyc_by_enumeration(p3), "PSL(2,5)": cyc_by_enumeration(p5)},
            note=f"the figures are subgroup counts: sub(PSL(2,3)) = {sub_count(p3)}, "
                 f"sub(PSL(2,5)) = {sub_count(p5)}",
        ),
        ClaimResult("involutions-PSL", "PSL(2,5) has 15 involutions, PSL(2,7) has 21",
                    {"PSL(2,5)": 15, "PSL(2,7)": 21},
                    {"PSL(2,5)": involution_count(p5), "PSL(2,7)": involution_count(c.psl2(7))}),
    ]
    ts = list(t_values)
    families = [
        ("witness-cyc-S3", "NILP_CYC", "cyc(S3 x prod Z_p) = 5*2^(t-2)", lambda t: 5 * 2 ** (t - 2), ts),
        ("witness-cyc-A4", "SUPER_CYC", "cyc(A4 x prod Z_p) = 2^(t+1)", lambda t: 2 ** (t + 1), ts),
        ("witness-sub-A4", "SUPER_SUB", "sub(A4 x prod Z_p) = 5*2^(t-2) for t > 2",
         lambda t: 5 * 2 ** (t - 2), [t for t in ts if t > 2]),
        ("witness-sub-A5", "SOLV_SUB", "sub(A5 x prod Z_p) = 59*2^(t-3)", lambda t: 59 * 2 ** (t - 3),
         [t for t in ts if t >= 3]),
    ]
    for cid, kind, statement, claimed_fn, t_list in families:
        claimed, computed = {}, {}
        for t in t_list:
            g = group_from_spec(witness_spec(t, kind))
            claimed[g.name] = claimed_fn(t)
            computed[g.name] = witness_values(g, kind)[0]
        claims.append(ClaimResult(cid, statement, claimed, computed))
    return claims


def errata_report(t_values: Iterable[int] = (2, 3, 4)) -> VerdictReport:
    """Compare the quoted numeric claims with computed values; discrepancies are the violations."""
    results = errata_claims(t_values)
    violations = []
    agreements = []
    for res in results:
        if res.agrees:
            agreements.append(res.claim_id)
        else:
            violations.append({"claim": res.claim_id, "statement": res.statement,
                               "claimed": dict(res.claimed), "computed": dict(res.computed),
                               "note": res.note})
    notes = [f"agreements {len(agreements)}: " + ", ".join(agreements),
             f"discrepancies {len(violations)}"]
    return _verdict("ERRATA", len(results), len(results), violations, notes)


# -- driver ---------------------------------------------------------------------

THEOREM_CHECKS = (
    check_richards,
    check_product_inequality,
    check_sylow_domination,
    check_extension_domination,
    check_domination_cyc,
    check_nilpotency_cyc,
    check_nilpotency_sub,
    check_supersolvable_divisor_criterion,
    check_supersolvable_cyc,
    check_supersolvable_sub,
    check_solvable_sub,
)


def run_theorem_checks(entries: Sequence[Entry]) -> List[VerdictReport]:
    return [check(entries) for check in THEOREM_CHECKS]


def run_verification(cfg: CorpusConfig, jobs: int = 1, q_max: int = 10**4,
                     eq31_max_order: int = 500) -> Tuple[List[VerdictReport], Corpus, List[Entry]]:
    corpus = build_corpus(cfg)
    entries = compute_entries(corpus, cfg, jobs=jobs)
    reports = run_theorem_checks(entries)
    reports.append(verify_involution_lemma([q for q in (3, 5, 7, 9, 11, 13) if q <= max(cfg.psl_q_max, 13)]))
    reports.append(verify_prime_inequalities(q_max))
    reports.append(verify_eq31(eq31_max_order))
    lo, hi = cfg.witness_t_range
    reports.append(check_sharpness(range(lo, hi + 1)))
    reports.append(scan_conjecture(entries))
    reports.sort(key=lambda r: r.check_id)
    return reports, corpus, entries
