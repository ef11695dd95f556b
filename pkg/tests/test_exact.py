"""Tests for exact arithmetic in Q(sqrt(D)).

Run: python3 -m pytest tests/test_exact.py -v
"""

from fractions import Fraction

import pytest

from genfib.errors import DomainError, FieldZeroDivisionError, MismatchedFieldError
from genfib.exact import QuadRat, arith, constants, field_element, power, sign, to_float


def _golden():
    e_theta, _, _ = constants(1)
    return e_theta


class TestQuadRat:
    def test_golden_ratio_satisfies_recurrence(self):
        """e^theta solves x^2 = kx + 1."""
        for k in range(1, 6):
            e_theta, _, D = constants(k)
            assert D == k * k + 4
            assert e_theta * e_theta == k * e_theta + 1

    def test_q_times_e_squared(self):
        """q * e^(2 theta) = -1."""
        e_theta, q, _ = constants(3)
        assert q * power(e_theta, 2) == -1

    def test_inverse_of_golden(self):
        """e^(-theta) = e^theta - k."""
        e = _golden()
        assert power(e, -1) == e - 1

    def test_mixed_fields_rejected(self):
        with pytest.raises(MismatchedFieldError):
            QuadRat(1, 1, 5) + QuadRat(1, 1, 8)

    def test_square_discriminant_rejected(self):
        with pytest.raises(DomainError):
            QuadRat(1, 1, 4)

    def test_zero_has_no_inverse(self):
        with pytest.raises(FieldZeroDivisionError):
            QuadRat(0, 0, 5).inverse()

    def test_rational_operands(self):
        e = _golden()
        assert 1 - e == QuadRat(Fraction(1, 2), Fraction(-1, 2), 5)
        assert 2 / e == 2 * (e - 1)
        assert field_element(3, 5) == 3
        assert QuadRat(Fraction(3, 2), 0, 5) == Fraction(3, 2)

    def test_hash_matches_rationals(self):
        assert len({QuadRat(2, 0, 5), 2}) == 1

    def test_norm_and_trace(self):
        e = _golden()
        assert e.norm() == -1
        assert e.trace() == 1
        assert e.conjugate() == 1 - e


SIGN_CASES = [
    (QuadRat(-2, 1, 5), 1),
    (QuadRat(3, -1, 5), 1),
    (QuadRat(2, -1, 5), -1),
    (QuadRat(0, -1, 5), -1),
    (QuadRat(0, 0, 5), 0),
]


class TestSign:
    @pytest.mark.parametrize("value,expected", SIGN_CASES)
    def test_sign(self, value, expected):
        assert sign(value) == expected

    def test_ordering(self):
        e = _golden()
        assert 1 < e < 2
        assert e >= e


FLOOR_CASES = [
    (QuadRat(Fraction(1, 2), Fraction(1, 2), 5), 1),
    (QuadRat(Fraction(-1, 2), Fraction(-1, 2), 5), -2),
    (QuadRat(0, 1, 5), 2),
    (QuadRat(Fraction(1, 2), Fraction(-1, 2), 5), -1),
    (QuadRat(Fraction(7, 2), 0, 5), 3),
]


class TestFloor:
    @pytest.mark.parametrize("value,expected", FLOOR_CASES)
    def test_floor(self, value, expected):
        assert value.floor() == expected


class TestArith:
    def test_dispatch(self):
        e = _golden()
        assert arith(e, e, "mul") == e + 1
        assert arith(e, e, "sub") == 0
        assert arith(e, e, "div") == 1

    def test_unknown_op(self):
        e = _golden()
        with pytest.raises(DomainError):
            arith(e, e, "pow")


class TestToFloat:
    def test_golden_ratio(self):
        assert to_float(_golden(), 7) == "1.618034"

    def test_negative(self):
        assert to_float(-_golden(), 4) == "-1.618"

    def test_zero(self):
        assert to_float(QuadRat(0, 0, 5), 3) == "0"

    def test_bad_digits(self):
        with pytest.raises(DomainError):
            to_float(_golden(), 0)
