import math

import pytest

from subcount import constructors as c
from subcount.errors import InvalidAction, NotPrimePower, NotSquarefree, OrderCapExceeded
from subcount.invariants import cyc_by_enumeration, involution_count
from subcount.isomorphism import is_isomorphic


def test_orders():
    assert c.cyclic(12).order == 12
    assert c.dihedral(7).order == 14
    assert c.generalized_quaternion(32).order == 32
    assert c.symmetric(5).order == 120
    assert c.alternating(6).order == 360
    assert c.sl2(4).order == 60 and c.sl2(5).order == 120
    assert c.psl2(7).order == 168 and c.psl2(8).order == 504 and c.psl2(9).order == 360
    assert c.direct_product(c.cyclic(4), c.symmetric(3)).order == 24


def test_cyclic_twelve():
    assert cyc_by_enumeration(c.cyclic(12)) == 6
    assert c.cyclic(12).is_cyclic()


def test_quaternion_has_one_involution():
    for order in (8, 16, 32):
        assert involution_count(c.generalized_quaternion(order)) == 1


def test_domain_errors():
    with pytest.raises(c.DomainError):
        c.cyclic(0)
    with pytest.raises(c.DomainError):
        c.generalized_quaternion(12)
    with pytest.raises(c.DomainError):
        c.symmetric(8)
    with pytest.raises(c.DomainError):
        c.psl2(2)
    with pytest.raises(NotPrimePower):
        c.sl2(6)
    with pytest.raises(OrderCapExceeded):
        c.psl2(13, order_cap=500)


def test_semidirect_validation():
    with pytest.raises(InvalidAction):
        c.semidirect_cyclic(c.SemidirectSpec(7, 2, 2))  # 2^2 != 1 mod 7
    with pytest.raises(InvalidAction):
        c.semidirect_cyclic(c.SemidirectSpec(9, 2, 3))  # 3 is not a unit mod 9
    g = c.semidirect_cyclic(c.SemidirectSpec(7, 3, 2))
    assert g.order == 21 and not g.is_abelian()
    assert g.meta["coprime"] and g.meta["semidirect"] == (7, 3, 2)


@pytest.mark.parametrize("a,b", [(3, 4), (5, 6), (7, 2), (9, 2), (1, 5)])
def test_trivial_action_is_cyclic(a, b):
    g = c.semidirect_cyclic(c.SemidirectSpec(a, b, 1))
    assert is_isomorphic(g, c.cyclic(a * b))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (6, 2), (15, 1), (21, 2), (30, 4), (42, 6), (105, 2)])
def test_squarefree_counts(n, count):
    assert len(c.squarefree_groups(n)) == count


def test_squarefree_210():
    groups = c.squarefree_groups(210)
    assert len(groups) == 12
    assert all(not is_isomorphic(a, b) for i, a in enumerate(groups) for b in groups[i + 1:])


def test_squarefree_count_formula():
    # Hoelder: sum over m | n of prod over primes p | n/m of (p^c(p) - 1)/(p - 1),
    # where c(p) is the number of primes q | m with q = 1 mod p.
    def hoelder(n):
        from subcount.numtheory import divisors, prime_divisors
        total = 0
        for m in divisors(n):
            term = 1
            for p in prime_divisors(n // m) if n // m > 1 else []:
                cp = sum(1 for q in (prime_divisors(m) if m > 1 else []) if q % p == 1)
                term *= (p**cp - 1) // (p - 1)
            total += term
        return total

    for n in (6, 10, 30, 42, 66, 70, 78, 102, 110):
        assert len(c.squarefree_groups(n)) == hoelder(n), n


def test_squarefree_rejects():
    with pytest.raises(NotSquarefree):
        c.squarefree_groups(12)


def test_psl_small_isomorphisms():
    assert is_isomorphic(c.psl2(4), c.alternating(5))
    assert is_isomorphic(c.psl2(5), c.alternating(5))
    assert math.gcd(c.psl2(9).order, 7) == 1
