"""Tests for the orthogonal polynomials of the moment functionals."""

from fractions import Fraction

import pytest

from genfib import config
from genfib.errors import DegenerateMomentError, DomainError
from genfib.hankel import MomentHankel, filbert_inverse_closed, moment_hankel
from genfib.linalg import exact_inverse
from genfib.orthopoly import (
    gram_report,
    kernel_inverse,
    lucas_hankel_report,
    monic_basis,
    norm_product_check,
    qjacobi_coeffs,
)

K_SPAN = range(config.HANKEL_K_RANGE[0], config.HANKEL_K_RANGE[1] + 1)
ALPHA_SPAN = range(config.HANKEL_ALPHA_RANGE[0], config.HANKEL_ALPHA_RANGE[1] + 1)
N_SPAN = range(config.HANKEL_N_RANGE[0], config.HANKEL_N_RANGE[1] + 1)


class TestGram:
    def test_fib_constants(self):
        report = gram_report("fib", 1, 1, 2)
        assert report.zeta == (1, Fraction(-1, 2), Fraction(1, 5))
        assert report.printed[1] == -1
        assert report.printed_holds == (True, False, False)
        assert report.closed_form_holds is True
        assert report.verbatim_orthogonal is True

    def test_lucas_verbatim_not_orthogonal(self):
        report = gram_report("lucas", 1, 1, 2)
        assert report.verbatim_orthogonal is False
        assert report.closed_form_holds is None

    def test_grid(self):
        """Corrected polynomials are orthogonal for both families."""
        for family in config.FAMILIES:
            for k in K_SPAN:
                for alpha in ALPHA_SPAN:
                    gram_report(family, k, alpha, config.GRAM_N_MAX)


class TestCoefficients:
    def test_lucas_corrected(self):
        assert qjacobi_coeffs("lucas", 1, 1, 2, mode="corrected") == [1, 4, Fraction(-28, 3)]

    def test_lucas_verbatim(self):
        assert qjacobi_coeffs("lucas", 1, 1, 2, mode="verbatim") == [1, 12, Fraction(-28, 3)]

    def test_bad_inputs(self):
        with pytest.raises(DomainError):
            qjacobi_coeffs("fib", 1, 0, 2)
        with pytest.raises(DomainError):
            qjacobi_coeffs("fib", 1, 1, 2, mode="loose")
        with pytest.raises(DomainError):
            qjacobi_coeffs("pell", 1, 1, 2)


class TestMonicBasis:
    def test_norm_product_is_det(self):
        assert norm_product_check(moment_hankel("fib", 1, 1, 2)) == Fraction(-1, 360)

    def test_kernel_inverse(self):
        mh = moment_hankel("fib", 1, 1, 2)
        inverse = kernel_inverse(monic_basis(mh))
        assert inverse == exact_inverse(mh.matrix)
        assert inverse == filbert_inverse_closed(1, 1, 2)

    def test_kernel_inverse_grid(self):
        """The kernel-sum inverse equals Gauss-Jordan over the default grid."""
        for k in K_SPAN:
            for alpha in ALPHA_SPAN:
                for n in N_SPAN:
                    mh = moment_hankel("fib", k, alpha, n)
                    assert kernel_inverse(monic_basis(mh)) == exact_inverse(mh.matrix)

    def test_lucas_kernel_inverse(self):
        mh = moment_hankel("lucas", 2, 1, 3)
        assert kernel_inverse(monic_basis(mh)) == exact_inverse(mh.matrix)

    def test_degenerate(self):
        mh = MomentHankel("fib", 1, 1, 1, (Fraction(1), Fraction(0), Fraction(0)))
        with pytest.raises(DegenerateMomentError):
            monic_basis(mh)


class TestLucasHankelReport:
    def test_rows(self):
        rows = lucas_hankel_report(1, 1, 1)
        assert rows[0].det == 1
        assert rows[0].printed_holds
        assert not rows[0].has_non_integer
        assert rows[1].det == Fraction(5, 36)
        assert rows[1].det_printed == Fraction(-1, 12)
        assert not rows[1].printed_holds
        assert rows[1].has_non_integer
