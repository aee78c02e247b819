from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import goldens, rationals
from pentatile.golden import ONE, SIGMA, SQRT5, TAU, ZERO, GoldenNumber


def test_distinguished_constants():
    assert TAU * SIGMA == -ONE
    assert TAU + SIGMA == ONE
    assert TAU ** 2 == TAU + ONE
    assert SIGMA ** 2 == SIGMA + ONE
    assert TAU.conjugate() == SIGMA
    assert float(TAU) == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-15)


def test_lowest_terms_and_equality():
    g = GoldenNumber(Fraction(2, 4), Fraction(-6, 9))
    assert g.a == Fraction(1, 2) and g.b == Fraction(-2, 3)
    assert GoldenNumber(3) == 3
    assert GoldenNumber(0, 1) != GoldenNumber(1, 0)


def test_immutable():
    with pytest.raises(AttributeError):
        TAU.a = 2


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_str_forms():
    assert str(TAU) == "1/2+1/2*sqrt5"
    assert str(ZERO) == "0"


@given(goldens(), goldens(), goldens())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@given(goldens())
def test_field_inverse(x):
    if x:
        assert x * x.inverse() == ONE
        assert ONE / x == x.inverse()


@given(goldens())
def test_norm_multiplicative_and_conjugate(x):
    assert x * x.conjugate() == GoldenNumber(x.norm())


@given(goldens())
def test_sign_matches_float(x):
    f = float(x.a) + float(x.b) * SQRT5
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)
    if x.sign() == 0:
        assert x == ZERO


@given(goldens(), goldens())
def test_total_order_consistent_with_sign(x, y):
    assert (x < y) == ((y - x).sign() > 0)
    assert (x < y) + (y < x) + (x == y) == 1


@given(rationals)
def test_rational_embedding(q):
    assert GoldenNumber(q) + TAU == TAU + q
    assert GoldenNumber(q).sign() == (q > 0) - (q < 0)


def test_pow():
    assert TAU ** 0 == ONE
    assert TAU ** -1 == TAU - ONE
    # tau^5 = 5 tau + 3
    assert TAU ** 5 == 5 * TAU + 3
