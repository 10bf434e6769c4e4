import math

from hypothesis import HealthCheck, given, settings, strategies as st

from subcount.dsl import group_from_spec
from subcount.group import join
from subcount.invariants import (cyc_by_enumeration, cyc_by_phi_sum, order_sequence, strongly_dominates,
                                 sub_count)
from subcount.lattice import all_subgroups
from subcount.numtheory import divisor_count
from subcount.structure import is_nilpotent, is_solvable, is_supersolvable


@st.composite
def semidirect_spec(draw):
    a = draw(st.integers(2, 13))
    b = draw(st.integers(1, 8))
    units = [r for r in range(1, a) if math.gcd(r, a) == 1 and pow(r, b, a) == 1]
    return f"SD({a},{b},{draw(st.sampled_from(units))})"


atom = st.one_of(
    st.integers(1, 40).map(lambda n: f"Z({n})"),
    st.integers(2, 16).map(lambda n: f"D({n})"),
    st.sampled_from(["S(3)", "S(4)", "A(4)", "A(5)", "Q(8)", "Q(16)", "SL(2,3)"]),
    semidirect_spec(),
)
spec = st.one_of(atom, st.tuples(atom, atom).map(" x ".join)).filter(
    lambda s: math.prod(group_from_spec(f).order for f in s.split(" x ")) <= 240)

groups = settings(max_examples=40, deadline=None,
                  suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


@groups
@given(spec)
def test_cyc_oracles_agree(s):
    g = group_from_spec(s)
    assert cyc_by_phi_sum(g) == cyc_by_enumeration(g) >= divisor_count(g.order)
    assert (cyc_by_enumeration(g) == divisor_count(g.order)) == g.is_cyclic()


@groups
@given(spec)
def test_lattice_closure_and_lagrange(s):
    g = group_from_spec(s)
    lat = all_subgroups(g)
    masks = {h.mask for h in lat}
    hs = list(lat)
    for h in hs:
        assert g.order % h.order == 0
    for a in hs[:12]:
        for b in hs[-12:]:
            assert a.mask & b.mask in masks
            assert join(a, b).mask in masks


@groups
@given(spec)
def test_classifier_chain(s):
    g = group_from_spec(s)
    nil, sup, sol = is_nilpotent(g), is_supersolvable(g), is_solvable(g)
    assert (not g.is_abelian()) or nil
    assert (not nil) or sup
    assert (not sup) or sol


@groups
@given(atom, atom)
def test_coprime_multiplicativity(a, b):
    g, h = group_from_spec(a), group_from_spec(b)
    if math.gcd(g.order, h.order) != 1 or g.order * h.order > 400:
        return
    prod = group_from_spec(f"{a} x {b}")
    assert cyc_by_enumeration(prod) == cyc_by_enumeration(g) * cyc_by_enumeration(h)
    assert sub_count(prod) == sub_count(g) * sub_count(h)


@groups
@given(atom, atom)
def test_product_inequality(a, b):
    g, h = group_from_spec(a), group_from_spec(b)
    if g.order * h.order > 400:
        return
    assert cyc_by_enumeration(group_from_spec(f"{a} x {b}")) >= cyc_by_enumeration(g) * cyc_by_enumeration(h)


@groups
@given(spec, spec)
def test_strong_domination_bounds_cyc(a, b):
    g, h = group_from_spec(a), group_from_spec(b)
    if g.order != h.order:
        return
    if strongly_dominates(order_sequence(g), order_sequence(h)):
        assert cyc_by_enumeration(g) <= cyc_by_enumeration(h)
