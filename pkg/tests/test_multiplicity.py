from math import comb

import pytest

from torusq import (CosetMismatch, NotDominantIntegral, build_root_datum, enumerate_weyl, kostant_mult,
                    kostant_partition, min_colour_index, symmetric_power_mult, weight_system,
                    weyl_dimension)
from torusq.errors import OutOfValidityWindow
from torusq.multiplicity import MultTable


def test_weight_system_examples():
    a1 = build_root_datum("A1")
    t = weight_system(a1, a1.fundamental(1) * 3)
    assert sorted(t.full_support_w().values()) == [1, 1, 1, 1]
    a2 = build_root_datum("A2")
    assert weight_system(a2, a2.rho).mult(a2.zero) == 2
    c2 = build_root_datum("C2")
    assert weight_system(c2, c2.fundamental(1) * 4).mult(c2.zero) == 3


def test_weight_system_rejects_nondominant():
    a2 = build_root_datum("A2")
    with pytest.raises(NotDominantIntegral):
        weight_system(a2, a2.weight([1, -1]))


def test_kostant_partition_examples():
    a2 = build_root_datum("A2")
    assert kostant_partition(a2, a2.zero) == 1
    assert kostant_partition(a2, a2.root([1, 1])) == 2
    for a in range(7):
        for b in range(7):
            assert kostant_partition(a2, a2.root([a, b])) == min(a, b) + 1


def test_kostant_mult_examples():
    a1 = build_root_datum("A1")
    g = enumerate_weyl(a1)
    assert kostant_mult(a1, g, a1.fundamental(1) * 3, a1.fundamental(1)) == 1
    a2 = build_root_datum("A2")
    assert kostant_mult(a2, enumerate_weyl(a2), a2.rho * 2, a2.zero) == 3
    g2 = build_root_datum("G2")
    lam = g2.fundamental(2)
    assert kostant_mult(g2, enumerate_weyl(g2), lam, g2.zero) == weight_system(g2, lam).mult(g2.zero) == 2


@pytest.mark.parametrize("name,w", [("A2", (2, 1)), ("B3", (1, 0, 1)), ("C3", (0, 1, 1)),
                                    ("D4", (1, 0, 0, 1)), ("G2", (2, 1)), ("F4", (0, 0, 0, 1))])
def test_dimension_matches_weyl_formula(name, w):
    d = build_root_datum(name)
    lam = d.weight(w)
    assert weight_system(d, lam).dimension() == weyl_dimension(d, lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_a2_multiples_of_rho(n):
    a2 = build_root_datum("A2")
    assert weight_system(a2, a2.rho * n).mult(a2.zero) == n + 1


def test_mult_table_json_round_trip():
    d = build_root_datum("C2")
    t = weight_system(d, d.weight([2, 1]))
    u = MultTable.from_dict(d, t.to_dict())
    assert u.mults_w == t.mults_w


def test_symmetric_power_examples():
    d = build_root_datum("C3")
    assert symmetric_power_mult("C", 3, 6, d.zero) == comb(5, 2) == 10
    assert symmetric_power_mult("B", 2, 5, build_root_datum("B2").zero) == 3
    assert symmetric_power_mult("D", 3, 4, build_root_datum("D3").zero) == 3


def test_symmetric_power_errors():
    c2 = build_root_datum("C2")
    with pytest.raises(OutOfValidityWindow):
        symmetric_power_mult("C", 2, 2, c2.fundamental(1) * 4)
    with pytest.raises(CosetMismatch):
        symmetric_power_mult("C", 2, 3, c2.zero)


def test_min_colour_index_examples():
    a1 = build_root_datum("A1")
    L = a1.fundamental(1)
    assert min_colour_index(a1, L, L * 3) == 3
    assert min_colour_index(a1, L * 2, a1.zero) == 1
    a2 = build_root_datum("A2")
    # theta = rho in A2, so 2 theta = 2 rho is already a weight of L(2 rho)
    assert a2.theta == a2.rho
    assert min_colour_index(a2, a2.rho, a2.theta * 2) == 2
    with pytest.raises(CosetMismatch):
        min_colour_index(a2, a2.rho, a2.fundamental(1))


def test_min_colour_index_against_brute_force():
    d = build_root_datum("A2")
    lam = d.fundamental(1)
    mu = d.weight([-1, -1]) * 2 + d.fundamental(1)
    n0 = min_colour_index(d, lam, mu)
    for n in range(1, n0 + 7):
        present = weight_system(d, lam * n).mult(mu) > 0
        assert present == (n >= n0 and (n - 1) % 3 == 0)
