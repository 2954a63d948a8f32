"""Exercises exact truncated-series arithmetic, including the order-shrinking
semantics of division and negative shifts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from airpockets.errors import (
    BadConstantTerm,
    DivisionByZeroSeries,
    NonInvertible,
    OrderMismatch,
    ValuationUnderflow,
)
from airpockets.series import TruncatedSeries


def S(coeffs, order):
    return TruncatedSeries(coeffs, order)


# ---------- construction and inspection ----------

def test_construction_pads_and_truncates():
    s = S([1, 2], 4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    t = S([1, 2, 3, 4, 5, 6, 7], 4)
    assert t.coeffs == (1, 2, 3, 4, 5)


def test_coefficients_are_fractions_in_lowest_terms():
    s = S([Fraction(2, 4)], 2)
    assert s.coefficient(0) == Fraction(1, 2)
    assert isinstance(s.coefficient(0), Fraction)


def test_coefficient_out_of_range():
    with pytest.raises(IndexError):
        S([1], 3).coefficient(4)
    with pytest.raises(IndexError):
        S([1], 3).coefficient(-1)


def test_valuation_and_zero():
    assert S([0, 0, 5], 6).valuation == 2
    assert TruncatedSeries.zero(6).valuation == 7
    assert TruncatedSeries.zero(6).is_zero()
    assert not S([0, 1], 6).is_zero()


def test_monomial_beyond_order_is_zero():
    assert TruncatedSeries.monomial(7, 4).is_zero()


def test_integer_coefficients():
    assert S([3, 0, -2], 2).integer_coefficients() == (3, 0, -2)
    with pytest.raises(ValueError):
        S([Fraction(1, 2)], 2).integer_coefficients()


def test_immutability():
    s = S([1], 2)
    with pytest.raises(AttributeError):
        s.order = 5


# ---------- ring operations ----------

def test_product_of_binomials():
    one_plus = S([1, 1], 4)
    one_minus = S([1, -1], 4)
    assert (one_plus * one_minus).coeffs == (1, 0, -1, 0, 0)


def test_product_can_vanish_under_truncation():
    x2 = TruncatedSeries.monomial(2, 4)
    x3 = TruncatedSeries.monomial(3, 4)
    assert (x2 * x3).is_zero()
    assert (x2 * x3).order == 4


def test_square_of_low_order_series():
    a = S([0, 0, 1, 1, 2, 4, 8], 6)
    assert (a * a).coeffs == (0, 0, 0, 0, 1, 2, 5)


def test_scalar_mixing():
    s = S([1, 2], 3)
    assert (2 * s).coeffs == (2, 4, 0, 0)
    assert (s + 1).coeffs == (2, 2, 0, 0)
    assert (1 - s).coeffs == (0, -2, 0, 0)
    assert (s / 2).coefficient(1) == 1


def test_order_mismatch_rejected():
    with pytest.raises(OrderMismatch):
        S([1], 3) + S([1], 4)
    with pytest.raises(OrderMismatch):
        S([1], 3) * S([1], 4)


# ---------- division ----------

def test_geometric_series():
    one = TruncatedSeries.one(6)
    g = one / S([1, -1], 6)
    assert g.coeffs == (1, 1, 1, 1, 1, 1, 1)


def test_division_cancels_valuation_and_shrinks_order():
    x2 = TruncatedSeries.monomial(2, 10)
    x5 = TruncatedSeries.monomial(5, 10)
    q = x5 / x2
    assert q.order == 8
    assert q.coeffs[3] == 1 and q.valuation == 3


def test_division_valuation_underflow():
    x = TruncatedSeries.monomial(1, 8)
    x2 = TruncatedSeries.monomial(2, 8)
    with pytest.raises(ValuationUnderflow):
        x / x2


def test_division_by_zero_series():
    with pytest.raises(DivisionByZeroSeries):
        S([1], 5) / TruncatedSeries.zero(5)


def test_division_roundtrip_with_valuation():
    a = S([0, 0, 3, 1, 4, 1, 5, 9, 2, 6, 5], 10)
    b = S([0, 0, 2, 7, 1, 8, 2, 8, 1, 8, 2], 10)
    q = a / b
    assert q.order == 8
    assert q * b.truncate(8) == a.truncate(8)


def test_negative_power_is_inverse():
    s = S([1, 1], 6)
    assert (s ** -1) * s == TruncatedSeries.one(6)
    assert s ** 0 == TruncatedSeries.one(6)
    with pytest.raises(NonInvertible):
        TruncatedSeries.monomial(1, 6) ** -1


# ---------- sqrt ----------

def test_sqrt_of_quartic_radicand():
    r = S([1, -2, -1, -2, 1], 12)
    w = r.sqrt()
    assert w.coeffs[:6] == (1, -1, -1, -2, -2, -4)
    assert w * w == r


def test_sqrt_requires_unit_constant():
    with pytest.raises(BadConstantTerm):
        S([4], 4).sqrt()
    with pytest.raises(BadConstantTerm):
        S([0, 1], 4).sqrt()


# ---------- shift and truncation ----------

def test_shift_up_preserves_order():
    s = S([1, 2, 3], 4)
    assert s.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert s.shift(2).order == 4


def test_shift_down_shrinks_order():
    s = S([0, 0, 0, 7, 5], 6)
    t = s.shift(-3)
    assert t.order == 3
    assert t.coeffs == (7, 5, 0, 0)
    with pytest.raises(ValuationUnderflow):
        s.shift(-4)


def test_truncate_only_downward():
    s = S([1, 2, 3], 5)
    assert s.truncate(2).coeffs == (1, 2, 3)
    with pytest.raises(OrderMismatch):
        s.truncate(6)


def test_zero_extend_for_polynomials():
    p = S([1, 2], 2)
    assert p.zero_extend(5).coeffs == (1, 2, 0, 0, 0, 0)


def test_agrees_through():
    a = S([1, 2, 3, 9], 3)
    b = S([1, 2, 3, 0], 3)
    assert a.agrees_through(b, 2)
    assert not a.agrees_through(b, 3)
    with pytest.raises(OrderMismatch):
        a.agrees_through(b, 4)


# ---------- algebraic laws ----------

coeff = st.integers(min_value=-9, max_value=9)
series20 = st.lists(coeff, min_size=0, max_size=21).map(
    lambda cs: TruncatedSeries(cs, 20))
unit20 = st.lists(coeff, min_size=0, max_size=20).map(
    lambda cs: TruncatedSeries([1] + cs, 20))


@settings(max_examples=100)
@given(series20, series20, series20)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + TruncatedSeries.zero(20) == a
    assert a * TruncatedSeries.one(20) == a
    assert a - a == TruncatedSeries.zero(20)


@settings(max_examples=100)
@given(series20, unit20)
def test_division_inverts_multiplication(a, u):
    assert (a * u) / u == a
    assert (a / u) * u == a


@settings(max_examples=50)
@given(unit20)
def test_sqrt_squares_back(u):
    s = u * u
    shifted = s / s.coefficient(0)
    root = shifted.sqrt()
    assert root * root == shifted
