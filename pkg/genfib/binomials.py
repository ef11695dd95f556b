"""Fibonomial and luconomial coefficients.

<n, j> = F_n F_{n-1} ... F_{n-j+1} / (F_1 F_2 ... F_j) is always an integer;
the Lucas analogue usually is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from genfib import config
from genfib.errors import DomainError, VerificationError
from genfib.sequences import SeqParams, fib, lucas


def _fibonomial_quotient(params: SeqParams, n: int, j: int) -> int:
    num, den = 1, 1
    for i in range(1, j + 1):
        num *= fib(params, n - i + 1)
        den *= fib(params, i)
    if num % den:
        raise VerificationError(f"fibonomial: <{n},{j}> not integral at k={params.k} ({num}/{den})")
    return num // den


@lru_cache(maxsize=config.CACHE_SIZE)
def _fibonomial_row(k: int, n: int) -> tuple[int, ...]:
    """Row n built by <n,j> = F_{j-1}<n-1,j> + F_{n-j+1}<n-1,j-1>."""
    if n == 0:
        return (1,)
    params = SeqParams(k)
    prev = _fibonomial_row(k, n - 1)

    def prev_entry(j: int) -> int:
        return prev[j] if 0 <= j <= n - 1 else 0

    return tuple(
        fib(params, j - 1) * prev_entry(j) + fib(params, n - j + 1) * prev_entry(j - 1)
        for j in range(n + 1)
    )


def fibonomial(params: SeqParams, n: int, j: int) -> int:
    """Fibonomial <n, j>, zero outside 0 <= j <= n.

    Evaluated by the product quotient and by the row recurrence; a
    disagreement raises VerificationError.
    """
    if n < 0:
        raise DomainError(f"fibonomial: n must be >= 0 (n={n}, j={j})")
    if j < 0 or j > n:
        return 0
    quotient = _fibonomial_quotient(params, n, j)
    recurrence = _fibonomial_row(params.k, n)[j]
    if quotient != recurrence:
        raise VerificationError(
            f"fibonomial: <{n},{j}> at k={params.k}: quotient {quotient} != recurrence {recurrence}"
        )
    return quotient


@dataclass(frozen=True)
class FibBinomTable:
    """Triangle of fibonomials <n, j>, 0 <= j <= n <= n_max, for one k."""

    k: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, params: SeqParams, n_max: int) -> FibBinomTable:
        if n_max < 0:
            raise DomainError(f"FibBinomTable: n_max must be >= 0 (n_max={n_max})")
        rows = tuple(
            tuple(fibonomial(params, n, j) for j in range(n + 1)) for n in range(n_max + 1)
        )
        for n, row in enumerate(rows):
            if row != row[::-1] or any(v <= 0 for v in row):
                raise VerificationError(f"FibBinomTable: row {n} at k={params.k} not symmetric positive")
        return cls(k=params.k, rows=rows)

    def entry(self, n: int, j: int) -> int:
        if j < 0 or j > n:
            return 0
        return self.rows[n][j]


class LuconomialValue(NamedTuple):
    value: Fraction
    is_integer: bool


def luconomial_value(params: SeqParams, n: int, j: int) -> Fraction:
    """Lucas analogue of the fibonomial, zero outside 0 <= j <= n."""
    if n < 0:
        raise DomainError(f"luconomial: n must be >= 0 (n={n}, j={j})")
    if j < 0 or j > n:
        return Fraction(0)
    value = Fraction(1)
    for i in range(1, j + 1):
        value *= Fraction(lucas(params, n - i + 1), lucas(params, i))
    return value


def luconomial(params: SeqParams, n: int, j: int) -> LuconomialValue:
    """Exact luconomial with an integrality flag; requires 0 <= j <= n."""
    if n < 0 or j < 0 or j > n:
        raise DomainError(f"luconomial: need 0 <= j <= n (n={n}, j={j})")
    value = luconomial_value(params, n, j)
    return LuconomialValue(value, value.denominator == 1)


class ProbeRow(NamedTuple):
    n: int
    j: int
    value: Fraction
    is_integer: bool


def odd_luconomial_probe(params: SeqParams, n_max: int) -> list[ProbeRow]:
    """Quotients of odd-indexed Lucas products, flagged for integrality.

    Entry (n, j) is prod L_{2(n-j+i)-1} / prod L_{2i-1} over i = 1..j.
    """
    if n_max < 1:
        raise DomainError(f"odd_luconomial_probe: n_max must be >= 1 (n_max={n_max})")
    rows = []
    for n in range(1, n_max + 1):
        for j in range(n + 1):
            value = Fraction(1)
            for i in range(1, j + 1):
                value *= Fraction(lucas(params, 2 * (n - j + i) - 1), lucas(params, 2 * i - 1))
            rows.append(ProbeRow(n, j, value, value.denominator == 1))
    return rows
