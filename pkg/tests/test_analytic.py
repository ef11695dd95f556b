"""Tests for continued fractions, arctan sums and reciprocal sums."""

import math
from fractions import Fraction

import pytest

from genfib import config
from genfib.analytic import arctan_suite, catalan_divisibility, continued_fraction, reciprocal_sum
from genfib.errors import DomainError
from genfib.exact import QuadRat


class TestContinuedFraction:
    def test_even_m(self):
        cf = continued_fraction(1, 2, 2)
        assert cf.quotients == (3, 3)
        assert cf.value == Fraction(8, 3)
        assert cf.sign == 1
        assert cf.printed_count_holds

    def test_odd_m(self):
        cf = continued_fraction(2, 1, 3)
        assert cf.quotients == (2, 2, 2)
        assert cf.value == Fraction(12, 5)
        assert cf.sign == -1
        assert not cf.printed_count_holds

    def test_single_quotient(self):
        cf = continued_fraction(1, 3, 1)
        assert cf.value == 4
        assert cf.depth == 1

    def test_bad_depth(self):
        with pytest.raises(DomainError):
            continued_fraction(1, 2, 0)


class TestArctan:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_series_converges(self, k):
        report = arctan_suite(k, m_max=50, tail_terms=25)
        assert report.holds
        assert report.exact_checked == 51
        assert report.residual < 1e-9

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_default_suite(self, k):
        report = arctan_suite(k)
        assert report.holds
        assert report.exact_checked == config.ARCTAN_EXACT_M_MAX + 1
        assert report.residual <= report.tail_bound + config.FLOAT_TOLERANCE

    def test_classical_step(self):
        """arctan(1) - arctan(1/3) = arctan(1/2)."""
        assert math.isclose(math.atan(1) - math.atan(1 / 3), math.atan(1 / 2))

    def test_bad_args(self):
        with pytest.raises(DomainError):
            arctan_suite(1, m_max=0)


class TestReciprocalSum:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_telescoping_to_n12(self, k):
        """Partial sums through 1/F_{4096} telescope and stay below the limit."""
        sums = reciprocal_sum(k, config.RECIPROCAL_N_RANGE[1])
        assert len(sums.partials) == 13
        assert sums.partials[-1] < sums.limit
        assert math.isclose(float(sums.partials[-1]), float(sums.limit_decimal(15)), rel_tol=1e-12)

    def test_classical_partials(self):
        sums = reciprocal_sum(1, 2)
        assert sums.partials == (1, 2, Fraction(7, 3))

    def test_classical_limit(self):
        sums = reciprocal_sum(1, 6)
        assert sums.limit == QuadRat(Fraction(7, 2), Fraction(-1, 2), 5)
        assert sums.limit_decimal(7) == "2.381966"

    def test_k2(self):
        assert reciprocal_sum(2, 1).partials[1] == Fraction(3, 2)

    def test_partials_increase_to_limit(self):
        sums = reciprocal_sum(3, 8)
        assert all(a < b for a, b in zip(sums.partials, sums.partials[1:]))
        assert all(p < sums.limit for p in sums.partials)

    def test_negative(self):
        with pytest.raises(DomainError):
            reciprocal_sum(1, -1)


class TestCatalanDivisibility:
    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_holds(self, k):
        report = catalan_divisibility(k, n_max=30, primes_below=50)
        assert report.hits > 0
        assert report.primes[:3] == (2, 3, 5)
