import pickle

import numpy as np
import pytest

from conftest import naive_closure, naive_cyclic_subgroups, naive_order
from subcount import constructors as c
from subcount.errors import GroupError, InvalidPermutation, OrderCapExceeded
from subcount.group import (class_size_multiset, conjugacy_classes, cyclic_subgroup, cyclic_subgroups,
                            generate, group_from_generators, group_from_table, intersection, is_normal,
                            join, normal_closure, order_counts, subgroup_from_mask)

SMALL = [c.cyclic(1), c.cyclic(12), c.symmetric(3), c.dihedral(4), c.generalized_quaternion(8),
         c.alternating(4), c.symmetric(4), c.sl2(3), c.semidirect_cyclic(c.SemidirectSpec(7, 3, 2))]


def test_table_shape_and_identity():
    for g in SMALL:
        n = g.order
        assert g.table.shape == (n, n)
        assert list(g.table[0]) == list(range(n))
        assert all(g.table[i, g.inverse[i]] == 0 for i in range(n))


def test_element_orders_match_naive():
    for g in SMALL:
        rows = g.table.tolist()
        assert [int(x) for x in g.element_orders] == [naive_order(rows, i) for i in range(g.order)]


def test_cyclic_subgroups_match_naive():
    for g in SMALL:
        mine = {frozenset(h.members) for h in cyclic_subgroups(g)}
        assert mine == naive_cyclic_subgroups(g.table.tolist())


def test_generate_matches_naive_closure():
    g = c.symmetric(4)
    rows = g.table.tolist()
    for seeds in ([1], [1, 2], [3, 7], [5, 11, 17], [23]):
        assert frozenset(generate(g, seeds).members) == naive_closure(rows, seeds)


def test_join_and_intersection():
    g = c.symmetric(4)
    hs = cyclic_subgroups(g)
    for a in hs[:8]:
        for b in hs[:8]:
            j = join(a, b)
            assert a.issubset(j) and b.issubset(j)
            meet = subgroup_from_mask(g, intersection(a, b))
            assert meet.order * j.order >= a.order * b.order


def test_permutation_groups():
    s3 = group_from_generators(3, [[1, 2, 0], [1, 0, 2]], "S3")
    assert s3.order == 6 and not s3.is_abelian()
    with pytest.raises(InvalidPermutation):
        group_from_generators(3, [[0, 0, 1]], "bad")
    with pytest.raises(InvalidPermutation):
        group_from_generators(3, [[0, 1]], "bad")
    with pytest.raises(OrderCapExceeded):
        group_from_generators(6, [[1, 2, 3, 4, 5, 0], [1, 0, 2, 3, 4, 5]], "S6", order_cap=100)


def test_bad_tables_rejected():
    with pytest.raises(GroupError):
        group_from_table([[0, 1], [1, 1]], "not latin")
    # Latin square with identity that is not associative (a loop of order 5).
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        group_from_table(loop, "loop")


def test_normality_and_classes():
    s4 = c.symmetric(4)
    assert sum(len(k) for k in conjugacy_classes(s4)) == 24
    assert class_size_multiset(s4) == (1, 3, 6, 6, 8)
    v4 = normal_closure(s4, [s4.element_orders.tolist().index(2)])
    assert v4.order in (4, 24)
    a4 = generate(s4, [i for i in range(24) if s4.element_orders[i] == 3])
    assert a4.order == 12 and is_normal(a4)
    t = cyclic_subgroup(s4, int(np.flatnonzero(s4.element_orders == 4)[0]))
    assert t.order == 4 and not is_normal(t)


def test_order_counts_sum():
    for g in SMALL:
        assert sum(order_counts(g).values()) == g.order


def test_pickle_drops_cache():
    g = c.alternating(4)
    cyclic_subgroups(g)
    h = pickle.loads(pickle.dumps(g))
    assert h.order == 12 and h.name == g.name and h._cache == {}
    assert np.array_equal(h.table, g.table)
