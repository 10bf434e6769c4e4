import pytest

from conftest import naive_all_subgroups
from subcount import constructors as c
from subcount.dsl import group_from_spec
from subcount.errors import LatticeCapExceeded
from subcount.lattice import all_subgroups, maximal_subgroups, sub_count

KNOWN_SUB = {
    "Z(1)": 1, "Z(12)": 6, "S(3)": 6, "D(4)": 10, "Q(8)": 6, "A(4)": 10, "Z(2) x Z(2) x Z(2)": 16,
    "S(4)": 30, "A(5)": 59, "SL(2,3)": 15, "S(5)": 156, "PSL(2,7)": 179, "Z(3) x Z(3)": 6, "D(6)": 16,
}


@pytest.mark.parametrize("spec,expected", sorted(KNOWN_SUB.items()))
def test_known_subgroup_counts(spec, expected):
    assert sub_count(group_from_spec(spec)) == expected


@pytest.mark.parametrize("spec", ["S(3)", "D(4)", "Q(8)", "A(4)", "Z(2) x Z(6)", "SD(5,4,2)", "D(6)"])
def test_lattice_equals_subset_brute_force(spec):
    g = group_from_spec(spec)
    mine = {frozenset(h.members) for h in all_subgroups(g)}
    assert mine == naive_all_subgroups(g.table.tolist())


@pytest.mark.parametrize("spec", ["S(4)", "SL(2,3)", "A(5)", "D(4) x Z(3)", "Q(16)"])
def test_lattice_closed_under_join_and_meet(spec):
    g = group_from_spec(spec)
    lat = all_subgroups(g)
    masks = {h.mask for h in lat}
    hs = list(lat)
    for a in hs[::3]:
        for b in hs[::5]:
            assert a.mask & b.mask in masks
    for h in hs:
        assert g.order % h.order == 0
        rows = g.table
        els = h.elements
        assert set(rows[els][:, els].ravel().tolist()) <= set(els.tolist())


def test_sorted_and_flags():
    lat = all_subgroups(c.symmetric(3))
    orders = [h.order for h in lat]
    assert orders == sorted(orders)
    assert lat.subgroups[0].order == 1 and lat.subgroups[-1].order == 6
    assert sum(lat.normal) == 3
    assert [h.order for h in maximal_subgroups(lat)] == [2, 2, 2, 3]
    assert lat.order_histogram() == {1: 1, 2: 3, 3: 1, 6: 1}


def test_caps():
    with pytest.raises(LatticeCapExceeded):
        all_subgroups(c.symmetric(5), lattice_cap=100)
    with pytest.raises(LatticeCapExceeded) as info:
        all_subgroups(c.symmetric(4), subgroup_cap=5)
    assert info.value.partial_count > 5
