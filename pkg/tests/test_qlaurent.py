from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from torusq import InexactDivision, QSeries, euler_product, inv_poch_product
from torusq.errors import PreconditionError
from torusq.qlaurent import add, mul, negate, normalize_by_trailing, scalar_mul, trailing

q = QSeries.monomial


def test_mul_examples():
    assert (1 - q(1)) * (q(0) + q(1) + q(2)) == 1 - q(3)
    assert q(F(1, 24)) * q(F(-1, 24)) == QSeries.one()


def test_truncated_window_bookkeeping():
    a = QSeries({0: 1, 3: 2}, prec=10)
    b = QSeries({0: 1}, prec=5)
    assert (a + b).prec == 5
    assert (a + b).coefficient(3) == 2
    with pytest.raises(PreconditionError):
        (a + b).coefficient(6)


def test_trailing_examples():
    assert trailing(-1 + q(2) + q(3) + q(4)) == (0, -1)
    assert trailing(q(F(1, 24)) * (1 - q(1))) == (F(1, 24), 1)
    with pytest.raises(PreconditionError):
        trailing(QSeries.zero())


def test_normalize_examples():
    assert normalize_by_trailing(-1 + q(2) + q(3) + q(4)) == 1 - q(2) - q(3) - q(4)
    assert normalize_by_trailing(q(5, 3)) == QSeries.one()
    assert normalize_by_trailing(q(F(-1, 24)) * (2 - 2 * q(1))) == 1 - q(1)
    with pytest.raises(PreconditionError):
        normalize_by_trailing(QSeries.zero())


def test_inv_poch_examples():
    assert inv_poch_product([1], 4).terms == [(k, 1) for k in range(5)]
    assert inv_poch_product([1, 1, 2], 3).terms == [(0, 1), (1, 2), (2, 4), (3, 6)]
    assert inv_poch_product([], 7).terms == [(0, 1)]
    with pytest.raises(PreconditionError):
        inv_poch_product([0], 3)


def test_euler_product_examples():
    e = euler_product(7)
    assert e.terms == [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)]
    assert euler_product(0).terms == [(0, 1)]
    assert euler_product(12).coefficient(12) == -1


def _pentagonal(N):
    out = {}
    for k in range(-N, N + 1):
        e = k * (3 * k - 1) // 2
        if e <= N:
            out[e] = (-1) ** k
    return out


@pytest.mark.parametrize("N", [0, 1, 5, 30, 60])
def test_euler_product_is_pentagonal(N):
    assert dict(euler_product(N).terms) == _pentagonal(N)


def test_div_one_minus_exact_and_inexact():
    assert (1 - q(6)).div_one_minus(2) == 1 + q(2) + q(4)
    with pytest.raises(InexactDivision):
        (1 - q(5)).div_one_minus(2)


def test_printing():
    assert str(-1 + q(2) + q(3) + q(4)) == "-1 + q^2 + q^3 + q^4"
    assert str(q(F(1, 24))) == "q^(1/24)"
    assert str(QSeries({2: F(1, 2)})) == "(1/2)*q^2"
    assert str(QSeries({0: 1}, prec=3)) == "1 + O(q^>3)"


def test_agreement_depth():
    a = 1 - q(2) - q(3)
    b = 1 - q(2) + q(3)
    assert a.agreement_depth(b, 10) == 2
    assert a.agreement_depth(a, 10) == 10


coeffs = st.integers(-5, 5)
exps = st.fractions(min_value=-3, max_value=6, max_denominator=6)
series = st.dictionaries(exps, coeffs, max_size=6).map(QSeries)


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, negate(a)).is_zero()
    assert scalar_mul(a, 3) == a + a + a


@given(series)
def test_json_round_trip(a):
    assert QSeries.from_json(a.to_json()) == a
    t = a.truncate(2)
    assert QSeries.from_dict(t.to_dict()) == t


@given(series, st.integers(1, 4))
def test_division_undoes_multiplication(a, step):
    assert (a * (1 - q(step))).div_one_minus(step) == a
