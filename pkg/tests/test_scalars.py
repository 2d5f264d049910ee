"""Tests for the coefficient ring Z[s^±1, c^±1, d^±1]."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from daha import ScalarPoly, c_power, d_power, hbar, parse_scalar, s_power
from daha.errors import ParseError

from conftest import scalar_polys

ZERO = ScalarPoly.zero()
ONE = ScalarPoly.one()


class TestArithmetic:
    def test_additive_inverse(self):
        assert s_power(1) + (-s_power(1)) == ZERO

    def test_sum_without_cancellation(self):
        total = s_power(1) + s_power(-1)
        assert total == ScalarPoly({(1, 0, 0): 1, (-1, 0, 0): 1})

    def test_partial_cancellation(self):
        assert hbar() + s_power(-1) == s_power(1)

    def test_unit_inverse(self):
        assert c_power(2) * c_power(-2) == ONE

    def test_difference_of_squares(self):
        product = hbar() * (s_power(1) + s_power(-1))
        assert product == s_power(2) - s_power(-2)

    def test_hbar_squared(self):
        # (s - s^-1)^2 expanded by hand: s^2 - 2 + s^-2.
        expected = ScalarPoly({(2, 0, 0): 1, (0, 0, 0): -2, (-2, 0, 0): 1})
        assert hbar() * hbar() == expected

    def test_integer_multiplication(self):
        assert hbar() * 2 == hbar() + hbar()
        assert 0 * hbar() == ZERO

    def test_power(self):
        assert hbar() ** 0 == ONE
        assert hbar() ** 3 == hbar() * hbar() * hbar()
        with pytest.raises(ValueError):
            hbar() ** -1

    def test_zero_terms_pruned_on_construction(self):
        poly = ScalarPoly([((1, 0, 0), 2), ((1, 0, 0), -2), ((0, 1, 0), 0)])
        assert poly == ZERO
        assert not poly


class TestHbar:
    def test_value(self):
        assert hbar() == s_power(1) - s_power(-1)

    def test_plus_s_inverse(self):
        assert hbar() + s_power(-1) == s_power(1)

    def test_vanishes_at_s_equals_one(self):
        assert hbar().evaluate(s=1) == 0
        assert hbar().evaluate(s=2) == Fraction(3, 2)


class TestSubstituteD:
    def test_d_becomes_s(self):
        assert d_power(1).substitute_d_eq_s() == s_power(1)

    def test_exponent_cancellation(self):
        assert (d_power(-1) * s_power(1)).substitute_d_eq_s() == ONE

    def test_exponent_arithmetic(self):
        value = c_power(2) * d_power(3) * s_power(-1)
        assert value.substitute_d_eq_s() == c_power(2) * s_power(2)

    def test_colliding_terms_merge(self):
        assert (d_power(1) - s_power(1)).substitute_d_eq_s() == ZERO

    @given(scalar_polys(), scalar_polys())
    def test_is_ring_homomorphism(self, a, b):
        assert (a + b).substitute_d_eq_s() == a.substitute_d_eq_s() + b.substitute_d_eq_s()
        assert (a * b).substitute_d_eq_s() == a.substitute_d_eq_s() * b.substitute_d_eq_s()


class TestRingAxioms:
    @given(scalar_polys(), scalar_polys(), scalar_polys())
    def test_add_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(scalar_polys(), scalar_polys())
    def test_add_commutative(self, a, b):
        assert a + b == b + a

    @given(scalar_polys(), scalar_polys())
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(scalar_polys(), scalar_polys(), scalar_polys())
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(scalar_polys(), scalar_polys(), scalar_polys())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(scalar_polys())
    def test_evaluation_is_consistent_with_mul(self, a):
        point = dict(s=Fraction(2), c=Fraction(1, 3), d=Fraction(-5))
        assert (a * a).evaluate(**point) == a.evaluate(**point) ** 2


class TestTextFormat:
    def test_canonical_examples(self):
        assert str(hbar() * hbar()) == "s^2 - 2 + s^-2"
        assert str(ZERO) == "0"
        assert str(ScalarPoly.integer(-7)) == "-7"
        assert str(s_power(1)) == "s"
        assert str(-s_power(1)) == "-s"
        assert str(c_power(2) * d_power(-3) * 2) == "2*c^2*d^-3"

    def test_parse_examples(self):
        assert parse_scalar("s^2 - 2 + s^-2") == hbar() * hbar()
        assert parse_scalar("-3*c*d^-1 + 1") == ScalarPoly({(0, 1, -1): -3, (0, 0, 0): 1})
        assert parse_scalar("0") == ZERO

    def test_parse_rejects_garbage(self):
        with pytest.raises(ParseError):
            parse_scalar("s +")
        with pytest.raises(ParseError):
            parse_scalar("q")
        with pytest.raises(ParseError):
            parse_scalar("s1")
        with pytest.raises(ParseError):
            parse_scalar("2 2")

    @given(scalar_polys())
    def test_round_trip(self, a):
        assert parse_scalar(str(a)) == a
