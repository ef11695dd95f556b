"""Tests for the Fibonacci convolution sums S_m(n).

Run: python3 -m pytest tests/test_convolution.py -v
"""

import pytest

from genfib.convolution import (
    convolution_S,
    convolution_bruteforce,
    convolution_closed,
    convolution_series,
    convolution_table,
)
from genfib.errors import BoundExceededError, DomainError

TEST_CASES = [
    {"m": 3, "n": 5, "k": 1, "expected": 9},
    {"m": 1, "n": 7, "k": 1, "expected": 13},
    {"m": 3, "n": 2, "k": 1, "expected": 0},
    {"m": 1, "n": 3, "k": 2, "expected": 5},
    {"m": 2, "n": 3, "k": 2, "expected": 4},
    {"m": 2, "n": 4, "k": 2, "expected": 14},
]


class TestEvaluations:
    @pytest.mark.parametrize("case", TEST_CASES)
    def test_dp(self, case):
        assert convolution_S(case["m"], case["n"], case["k"]) == case["expected"]

    @pytest.mark.parametrize("case", TEST_CASES)
    def test_bruteforce(self, case):
        assert convolution_bruteforce(case["m"], case["n"], case["k"]) == case["expected"]

    @pytest.mark.parametrize("case", TEST_CASES)
    def test_closed_and_series(self, case):
        assert convolution_closed(case["m"], case["n"], case["k"]) == case["expected"]
        assert convolution_series(case["m"], case["n"], case["k"]) == case["expected"]

    def test_empty_sum(self):
        assert convolution_S(1, 0, 3) == 0
        assert convolution_bruteforce(1, 0, 3) == 0


class TestTable:
    def test_small_grid(self):
        rows = convolution_table(3, 12, 2)
        assert len(rows) == 3 * 13 * 2
        assert all(row.bruteforce == row.value for row in rows)

    def test_brute_skipped_past_cap(self):
        rows = convolution_table(1, 22, 1)
        assert rows[-1].bruteforce is None
        assert rows[-1].value == 17711


class TestErrors:
    @pytest.mark.parametrize("m_max,n_max,k_max", [(0, 5, 1), (2, 5, 0), (2, -1, 1)])
    def test_table_bounds(self, m_max, n_max, k_max):
        with pytest.raises(DomainError):
            convolution_table(m_max, n_max, k_max)

    def test_bad_m(self):
        with pytest.raises(DomainError):
            convolution_S(0, 3, 1)

    def test_bad_n(self):
        with pytest.raises(DomainError):
            convolution_closed(2, -1, 1)

    def test_brute_bound(self):
        with pytest.raises(BoundExceededError):
            convolution_bruteforce(2, 25, 1)
