import itertools

import pytest

from subcount.errors import NotPrimePower
from subcount.gf import find_irreducible, is_irreducible, make_field


def brute_irreducible(m, p):
    # m is monic of degree f, coefficients low to high; look for a root-free factorisation.
    f = len(m) - 1
    for d in range(1, f // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            rem = list(m)
            for i in range(len(rem) - len(divisor), -1, -1):
                coef = rem[i + d]
                for j, x in enumerate(divisor):
                    rem[i + j] = (rem[i + j] - coef * x) % p
            if not any(rem[:d]):
                return False
    return True


@pytest.mark.parametrize("p,f", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_irreducibility_against_trial_division(p, f):
    for low in itertools.product(range(p), repeat=f):
        m = list(low) + [1]
        assert is_irreducible(m, p) == brute_irreducible(m, p)
    assert brute_irreducible(find_irreducible(p, f), p)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    k = make_field(q)
    add, mul = k.add, k.mul
    els = range(q)
    for a in els:
        assert add[a, 0] == a and mul[a, 1] == a and mul[a, 0] == 0
        assert add[a, k.neg(a)] == 0
        if a:
            assert mul[a, k.inv(a)] == 1
    for a, b, c in itertools.product(els, repeat=3):
        if (a * 7 + b * 3 + c) % 5:  # a deterministic sample keeps this quick
            continue
        assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]
        assert mul[mul[a, b], c] == mul[a, mul[b, c]]


@pytest.mark.parametrize("q", [4, 8, 9, 27])
def test_frobenius_is_additive_and_multiplicative(q):
    k = make_field(q)
    for a in range(q):
        for b in range(q):
            assert k.frobenius(int(k.add[a, b])) == k.add[k.frobenius(a), k.frobenius(b)]
            assert k.frobenius(int(k.mul[a, b])) == k.mul[k.frobenius(a), k.frobenius(b)]


def test_multiplicative_group_is_cyclic():
    k = make_field(16)
    orders = set()
    for a in range(1, 16):
        e = 1
        while k.power(a, e) != 1:
            e += 1
        orders.add(e)
    assert max(orders) == 15


def test_rejects_non_prime_power():
    with pytest.raises(NotPrimePower):
        make_field(12)
