from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from torusq import InvalidLieType, PreconditionError, build_root_datum, enumerate_weyl
from torusq.rootdata import LieType, inner, sigma_data

TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4", "E6"]


def test_a2_summary():
    d = build_root_datum("A2")
    assert d.dual_coxeter == 3
    assert list(d.j_set) == [0, 1, 2]
    assert len(d.positive_roots) == 3


def test_g2_roots_and_rho():
    d = build_root_datum("G2")
    assert d.dual_coxeter == 4
    assert list(d.j_set) == [0]
    roots = {tuple(int(c) for c in a.root_coords) for a in d.positive_roots}
    assert roots == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert d.rho == d.root([5, 3])


def test_c2_normalization():
    d = build_root_datum("C2")
    assert list(d.j_set) == [0, 2]
    assert d.norm2(d.rho) == Fraction(5, 2)
    assert d.short_len == 1


def test_inner_examples():
    a2 = build_root_datum("A2")
    assert inner(a2, a2.rho, a2.rho) == 2
    assert a2.inner(a2.fundamental(1), a2.fundamental(1)) == Fraction(2, 3)
    assert a2.inner(a2.fundamental(1), a2.fundamental(2)) == Fraction(1, 3)
    a1 = build_root_datum("A1")
    assert a1.inner(a1.fundamental(1), a1.fundamental(1)) == Fraction(1, 2)
    c2 = build_root_datum("C2")
    short = c2.simple_root(1)
    assert c2.inner(short, short) == 1


@pytest.mark.parametrize("name", TYPES)
def test_highest_root_has_norm_two(name):
    d = build_root_datum(name)
    assert d.norm2(d.theta) == 2
    assert d.dual_coxeter == sum(d.colabels)
    assert d.coxeter == sum(d.labels)


@pytest.mark.parametrize("name,h,hv", [("A3", 4, 4), ("B3", 6, 5), ("C3", 6, 4), ("D4", 6, 6),
                                       ("G2", 6, 4), ("F4", 12, 9), ("E6", 12, 12), ("E8", 30, 30)])
def test_coxeter_numbers(name, h, hv):
    d = build_root_datum(name)
    assert (d.coxeter, d.dual_coxeter) == (h, hv)


def test_sigma_data_examples():
    a1 = build_root_datum("A1")
    s, i, sign = sigma_data(a1, 1)
    assert list(s.word) == [1] and i == 1 and sign == -1
    a2 = build_root_datum("A2")
    s, i, sign = sigma_data(a2, 1)
    assert i == 2 and sign == 1
    assert s.act(a2.simple_root(1)) == a2.simple_root(2)
    assert s.act(a2.simple_root(2)) == -a2.theta
    for name in TYPES:
        d = build_root_datum(name)
        s, i, sign = sigma_data(d, 0)
        assert s.length == 0 and i == 0 and sign == 1


def test_sigma_data_rejects_index_outside_j():
    with pytest.raises(PreconditionError):
        sigma_data(build_root_datum("G2"), 1)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B3", "C2", "C3", "D4", "D5"])
def test_sigma_bar_matches_exhaustive_search(name):
    # oracle: the unique w sending the finite simple roots onto the affine ones with node j removed
    d = build_root_datum(name)
    g = enumerate_weyl(d)
    affine = [-d.theta] + [d.simple_root(k) for k in range(1, d.rank + 1)]
    for j in d.j_set:
        target = {r for k, r in enumerate(affine) if k != j}
        found = [w for w in g if {w.act(d.simple_root(k)) for k in range(1, d.rank + 1)} == target]
        assert len(found) == 1
        assert found[0].matrix == d.sigma_bar[j].matrix
        i = d.i_of_j[j]
        assert d.sigma_bar[j].inverse().act(d.fundamental(j)) == -d.fundamental(i)


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D3x", "E5", "E9", "F3", "G3", "Z2", "", "A"])
def test_invalid_types(bad):
    with pytest.raises(InvalidLieType):
        LieType.parse(bad)


@pytest.mark.parametrize("name", TYPES)
def test_positive_root_count(name):
    expected = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C2": 4, "C3": 9, "D4": 12,
                "G2": 6, "F4": 24, "E6": 36}[name]
    assert len(build_root_datum(name).positive_roots) == expected


@given(st.sampled_from(TYPES[:9]), st.lists(st.integers(-20, 20), min_size=4, max_size=4))
def test_basis_round_trip(name, raw):
    d = build_root_datum(name)
    w = tuple(raw[:d.rank])
    x = d.weight(w)
    assert d.int_weight_coords(x) == w
    assert d.root(x.root_coords) == x


@given(st.sampled_from(TYPES[:9]), st.lists(st.integers(-6, 6), min_size=8, max_size=8))
def test_weyl_group_preserves_form(name, raw):
    d = build_root_datum(name)
    g = enumerate_weyl(d)
    x, y = d.weight(raw[:d.rank]), d.weight(raw[4:4 + d.rank])
    for w in list(g)[:: max(1, g.order // 8)]:
        assert d.inner(w.act(x), w.act(y)) == d.inner(x, y)


def test_coset_index_and_order():
    a2 = build_root_datum("A2")
    assert a2.coset_index(a2.fundamental(1)) == 1
    assert a2.coset_index(a2.rho) == 0
    assert a2.coset_order(a2.fundamental(1)) == 3
    assert a2.coset_order(a2.rho) == 1
    c2 = build_root_datum("C2")
    assert c2.coset_order(c2.fundamental(2)) == 1
