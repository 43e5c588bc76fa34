from fractions import Fraction as F

import pytest

from torusq import (NoTheoremApplies, NotCoprime, QSeries, TorusKnot, build_root_datum, enumerate_weyl,
                    jones_hat, jones_lattice, jones_rosso, predict_trailing, weight_system)
from torusq.knotinv import SHORT_ROOT, SIMPLY_LACED, qdim_char, ribbon_exponent, short_root_bound_holds

q = QSeries.monomial
TREFOIL_1 = -1 + q(2) + q(3) + q(4)
TREFOIL_2 = 1 - q(2) - q(3) - q(4) + q(7) + q(8) + q(9) + q(10) + q(11)


def _dg(name):
    d = build_root_datum(name)
    return d, enumerate_weyl(d)


def test_qdim_examples():
    d, _ = _dg("A1")
    L = d.fundamental(1)
    assert qdim_char(d, L) == q(F(1, 2)) + q(F(-1, 2))
    assert qdim_char(d, L * 2) == q(1) + 1 + q(-1)
    assert qdim_char(build_root_datum("G2"), build_root_datum("G2").zero) == QSeries.one()


def test_qdim_at_one_is_dimension():
    d = build_root_datum("C2")
    lam = d.weight([1, 2])
    assert sum(c for _, c in qdim_char(d, lam).terms) == weight_system(d, lam).dimension()


def test_ribbon_examples():
    d, _ = _dg("A1")
    assert ribbon_exponent(d, d.fundamental(1)) == F(3, 4)
    assert ribbon_exponent(d, d.zero) == 0
    assert ribbon_exponent(d, d.fundamental(1) * 2) == 2


def test_trefoil():
    d, g = _dg("A1")
    L = d.fundamental(1)
    k = TorusKnot(2, 3)
    assert jones_rosso(d, g, k, L) == TREFOIL_1
    assert jones_lattice(d, g, k, L) == TREFOIL_1
    assert jones_lattice(d, g, k.swapped(), L) == TREFOIL_1
    assert jones_rosso(d, g, k, L * 2) == TREFOIL_2
    assert jones_lattice(d, g, k, L * 2) == TREFOIL_2
    assert jones_hat(d, g, k, L) == 1 - q(2) - q(3) - q(4)
    assert jones_hat(d, g, k, L * 2) == jones_rosso(d, g, k, L * 2)


@pytest.mark.parametrize("name", ["A1", "A2", "C2", "G2"])
def test_trivial_colour(name):
    d, g = _dg(name)
    k = TorusKnot(3, 5)
    assert jones_rosso(d, g, k, d.zero) == QSeries.one()
    assert jones_lattice(d, g, k, d.zero) == QSeries.one()
    assert jones_hat(d, g, k, d.zero) == QSeries.one()


def test_a2_trailing_term():
    d, g = _dg("A2")
    assert jones_lattice(d, g, TorusKnot(3, 4), d.rho).trailing() == (0, 2)


@pytest.mark.parametrize("name,w,k", [("A2", (2, 0), (2, 5)), ("B2", (1, 0), (3, 4)),
                                      ("G2", (1, 0), (2, 3)), ("A3", (0, 1, 0), (3, 4))])
def test_forms_agree(name, w, k):
    d, g = _dg(name)
    lam = d.weight(w)
    knot = TorusKnot(*k)
    assert jones_rosso(d, g, knot, lam) == jones_lattice(d, g, knot, lam)


def test_window_truncation_agrees_with_exact():
    d, g = _dg("A2")
    k = TorusKnot(3, 4)
    exact = jones_hat(d, g, k, d.rho * 2)
    cut = jones_hat(d, g, k, d.rho * 2, window=8)
    assert cut.prec == 8
    assert exact.truncate(8) == cut


def test_knot_validation():
    with pytest.raises(NotCoprime):
        TorusKnot(2, 4)
    with pytest.raises(ValueError):
        TorusKnot(0, 3)


def test_predict_trailing_examples():
    d, g = _dg("A1")
    p = predict_trailing(d, g, TorusKnot(2, 3), d.fundamental(1))
    assert (p.exponent, p.sign, p.regime) == (0, -1, SIMPLY_LACED)
    assert p.coeff_weight == -d.fundamental(1)
    c2, gc = _dg("C2")
    assert short_root_bound_holds(c2, 7, 8)
    assert predict_trailing(c2, gc, TorusKnot(7, 8), c2.fundamental(2)).regime == SHORT_ROOT
    with pytest.raises(NoTheoremApplies):
        predict_trailing(c2, gc, TorusKnot(3, 4), c2.fundamental(2))


def test_short_root_bound_g2():
    d = build_root_datum("G2")
    assert short_root_bound_holds(d, 11, 13)
    assert not short_root_bound_holds(d, 5, 7)
