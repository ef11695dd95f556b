"""Tests for the correction solver that fits repaired right-hand sides."""

from fractions import Fraction

import pytest

from genfib.errors import UnderdeterminedAnsatzError
from genfib.identities.base import F
from genfib.identities.correction import (
    AnsatzTerm,
    correction_solve,
    linear_ansatz,
    quadratic_ansatz,
)
from genfib.identities.runner import fitted_correction
from genfib.sequences import SeqParams


def _pd3(p, n):
    return F(p, n - 2) * F(p, n + 1) ** 2 - F(p, n) ** 3


class TestAnsatz:
    def test_linear_terms(self):
        terms = linear_ansatz((0, 1), 2)
        assert len(terms) == 6
        assert terms[0] == AnsatzTerm(0, (("fib", 0),))
        assert terms[-1] == AnsatzTerm(2, (("fib", 1),))

    def test_quadratic_terms(self):
        terms = quadratic_ansatz((-1, 0), 1)
        assert [t.factors for t in terms[::2]] == [
            (("fib", -1), ("fib", -1)),
            (("fib", -1), ("fib", 0)),
            (("fib", 0), ("fib", 0)),
        ]

    def test_evaluate(self):
        term = AnsatzTerm(2, (("fib", 1),))
        assert term.evaluate(SeqParams(2), 3) == -4 * 12
        assert term.evaluate(SeqParams(2), 2) == 4 * 5

    def test_monomial(self):
        assert AnsatzTerm(0, (("fib", -1), ("fib", -1))).monomial() == "F_{n-1}^2"
        assert AnsatzTerm(0, (("lucas", 0),)).monomial() == "L_{n}"


class TestCorrectionSolve:
    def test_recovers_known_rhs(self):
        """F_{n-2}F_{n+1}^2 - F_n^3 = (-1)^(n-1) F_{n-1} at k = 1."""
        fit = correction_solve(_pd3, linear_ansatz((-1, 0, 1), 0), k_fit=(1, 1))
        assert fit is not None
        assert fit.coefficients() == {(0, (("fib", -1),)): Fraction(-1)}
        assert fit.text == "(-1)^n [-F_{n-1}]"
        assert fit.checked > 0

    def test_inconsistent_returns_none(self):
        fit = correction_solve(lambda p, n: F(p, n) ** 2, linear_ansatz((0,), 0), k_fit=(1, 2))
        assert fit is None

    def test_empty_ansatz(self):
        with pytest.raises(UnderdeterminedAnsatzError):
            correction_solve(_pd3, ())

    def test_too_few_samples(self):
        with pytest.raises(UnderdeterminedAnsatzError):
            correction_solve(_pd3, linear_ansatz((0, 1), 10), k_fit=(1, 1), n_fit=(2, 4))


class TestRegistryFits:
    def test_product_diff_k1(self):
        fit = fitted_correction("product-diff-k-1")
        assert fit.coefficients() == {
            (3, (("fib", 0),)): 1,
            (4, (("fib", 1),)): 1,
            (0, (("fib", 1),)): -1,
        }

    def test_product_diff_k6(self):
        fit = fitted_correction("product-diff-k-6")
        assert fit.coefficients() == {
            (2, (("fib", -1), ("fib", -1))): 1,
            (0, (("fib", -1), ("fib", -1))): 1,
            (1, (("fib", -1), ("fib", 0))): 1,
            (0, (("fib", 0), ("fib", 0))): 1,
        }

    def test_not_solver_routed(self):
        assert fitted_correction("cassini") is None
