import math

import pytest

from oracles import table_by_enumeration
from pocgroups.closedform import (
    OrderClassTable,
    abelian_order_counts,
    coprime_product_counts,
    cyclic_order_counts,
    group_order_counts,
    hamiltonian_order_counts,
    lcm_convolve,
    quaternion_order_counts,
)
from pocgroups.groupspec import (
    GroupSpec,
    HamiltonianSpec,
    abelian_specs_of_order,
    cyclic,
    enumerate_hamiltonian,
    make_abelian,
    parse_spec,
    to_hamiltonian,
)
from pocgroups.numtheory import divisors

TRIVIAL_TABLE = OrderClassTable(1, ((1, 1),))


def ham(text):
    return to_hamiltonian(parse_spec(text))


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, {1: 1}),
        (9, {1: 1, 3: 2, 9: 6}),
        (12, {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}),
    ],
)
def test_cyclic_examples(n, expected):
    assert cyclic_order_counts(n).as_dict() == expected


def test_cyclic_matches_enumeration():
    for n in range(1, 300):
        assert cyclic_order_counts(n).as_dict() == table_by_enumeration([n])


def test_abelian_examples():
    assert abelian_order_counts(make_abelian([(3, 1), (3, 1)]))[3] == 8
    assert abelian_order_counts(make_abelian([])).as_dict() == {1: 1}
    assert abelian_order_counts(make_abelian([(2, 1), (2, 2)])).as_dict() == {1: 1, 2: 3, 4: 4}


def test_abelian_rank_formula():
    # #(p) = p^rank - 1 for every p-group.
    for p in (2, 3, 5):
        for n in range(1, 6):
            for a in abelian_specs_of_order(p**n):
                assert abelian_order_counts(a)[p] == p ** a.rank(p) - 1


def test_abelian_matches_enumeration():
    for n in range(1, 130):
        for a in abelian_specs_of_order(n):
            assert abelian_order_counts(a).as_dict() == table_by_enumeration(a.sizes())


def test_abelian_matches_convolution():
    for n in range(1, 2000):
        for a in abelian_specs_of_order(n):
            assert abelian_order_counts(a) == group_order_counts(GroupSpec(False, a))


def test_quaternion_table():
    t = quaternion_order_counts()
    assert t.as_dict() == {1: 1, 2: 1, 4: 6}
    assert sum(c for _, c in t) == 8 == t.group_order
    assert t[2] == 1
    assert t.as_dict() == table_by_enumeration([], with_q=True)


def test_lcm_convolve_examples():
    qc3 = lcm_convolve(quaternion_order_counts(), cyclic_order_counts(3))
    assert qc3.as_dict() == {1: 1, 2: 1, 3: 2, 4: 6, 6: 2, 12: 12}
    assert qc3.as_dict() == table_by_enumeration([3], with_q=True)
    x = cyclic_order_counts(12)
    assert lcm_convolve(x, TRIVIAL_TABLE) == x
    assert lcm_convolve(cyclic_order_counts(2), cyclic_order_counts(2)).as_dict() == {1: 1, 2: 3}


def test_coprime_product_examples():
    c6 = coprime_product_counts(cyclic_order_counts(2), cyclic_order_counts(3))
    assert c6.as_dict() == {1: 1, 2: 1, 3: 2, 6: 2}
    q5 = coprime_product_counts(quaternion_order_counts(), cyclic_order_counts(5))
    assert q5[20] == 24
    with pytest.raises(ValueError):
        coprime_product_counts(cyclic_order_counts(2), cyclic_order_counts(2))


def test_coprime_agrees_with_convolution():
    tables = {n: cyclic_order_counts(n) for n in range(1, 201)}
    for m in range(1, 201):
        for n in range(1, 201):
            if math.gcd(m, n) == 1:
                assert coprime_product_counts(tables[m], tables[n]) == \
                    lcm_convolve(tables[m], tables[n])
    q = quaternion_order_counts()
    for n in range(1, 201, 2):
        for a in abelian_specs_of_order(n):
            t = abelian_order_counts(a)
            assert coprime_product_counts(q, t) == lcm_convolve(q, t)


def test_hamiltonian_examples():
    assert hamiltonian_order_counts(HamiltonianSpec(0)).as_dict() == {1: 1, 2: 1, 4: 6}
    t = hamiltonian_order_counts(ham("QxC2xC3"))
    assert (t[2], t[4]) == (3, 12)
    assert hamiltonian_order_counts(ham("QxC3"))[12] == 12


def test_hamiltonian_formula_matches_convolution():
    for h in enumerate_hamiltonian(5000):
        assert hamiltonian_order_counts(h) == group_order_counts(h.to_group())


def test_hamiltonian_support_and_special_values():
    for h in enumerate_hamiltonian(5000):
        t = hamiltonian_order_counts(h)
        ds = divisors(h.odd_part.exponent())
        assert set(t.orders) == {m * d for d in ds for m in (1, 2, 4)}
        assert t[2] == 2 ** (h.e + 1) - 1
        assert t[4] == 3 * 2 ** (h.e + 1)


def test_tables_validate():
    for h in enumerate_hamiltonian(3000):
        hamiltonian_order_counts(h).validate()
    for n in range(1, 1000):
        for a in abelian_specs_of_order(n):
            abelian_order_counts(a).validate()


def test_counts_are_unbounded_integers():
    h = HamiltonianSpec(200, cyclic(3))
    t = hamiltonian_order_counts(h)
    assert t[2] == 2**201 - 1
    assert sum(c for _, c in t) == h.order


def test_validate_rejects_broken_tables():
    with pytest.raises(ValueError):
        OrderClassTable(6, ((1, 1), (2, 3))).validate()
    with pytest.raises(ValueError):
        OrderClassTable(4, ((1, 1), (4, 3))).validate()
    assert OrderClassTable(6, ((1, 1),))[5] == 0
