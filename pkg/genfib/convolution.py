"""Convolution sums S_m(n) = sum over compositions j_1 + ... + j_m = n of prod F_{j_i}.

Four independent evaluations:
  convolution_S          Cauchy products of the coefficient sequence (DP)
  convolution_bruteforce composition enumeration
  convolution_closed     three-term recurrence of the ultraspherical closed form
  convolution_series     the closed form's explicit hypergeometric sum
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from genfib import config
from genfib.errors import BoundExceededError, DomainError, VerificationError
from genfib.sequences import SeqParams, fib


def _check(m: int, n: int, op: str) -> None:
    if m < 1:
        raise DomainError(f"{op}: m must be >= 1 (m={m})")
    if n < 0:
        raise DomainError(f"{op}: n must be >= 0 (n={n})")


@lru_cache(maxsize=config.CACHE_SIZE)
def _power_series(k: int, m: int, length: int) -> tuple[int, ...]:
    """Coefficients 0..length-1 of (sum_j F_j x^j)^m."""
    params = SeqParams(k)
    base = [fib(params, j) for j in range(length)]
    if m == 1:
        return tuple(base)
    prev = _power_series(k, m - 1, length)
    return tuple(sum(prev[i] * base[n - i] for i in range(n + 1)) for n in range(length))


def convolution_S(m: int, n: int, k: int) -> int:
    """S_m(n) by repeated Cauchy convolution; zero for n < m."""
    _check(m, n, "convolution_S")
    SeqParams(k)
    return _power_series(k, m, n + 1)[n]


def convolution_bruteforce(m: int, n: int, k: int) -> int:
    """S_m(n) by enumerating compositions of n into m positive parts."""
    _check(m, n, "convolution_bruteforce")
    if n > config.BRUTE_COMPOSITION_N_MAX:
        raise BoundExceededError(
            f"convolution_bruteforce: n={n} exceeds {config.BRUTE_COMPOSITION_N_MAX}"
        )
    params = SeqParams(k)
    if n < m:
        return 0
    total = 0
    for cuts in combinations(range(1, n), m - 1):
        edges = (0, *cuts, n)
        total += prod(fib(params, edges[i + 1] - edges[i]) for i in range(m))
    return total


def _w_sequence(m: int, r: int, k: int) -> list[Fraction]:
    """W_0..W_r with r W_r = k(r+m-1) W_{r-1} + (r+2m-2) W_{r-2}."""
    w = [Fraction(1), Fraction(m * k)]
    for i in range(2, r + 1):
        w.append((k * (i + m - 1) * w[i - 1] + (i + 2 * m - 2) * w[i - 2]) / i)
    return w[: r + 1]


def convolution_closed(m: int, n: int, k: int) -> Fraction:
    """S_m(n) from the closed form, i.e. W_{n-m}; checked against the DP and for integrality."""
    _check(m, n, "convolution_closed")
    if n < m:
        value = Fraction(0)
    else:
        value = _w_sequence(m, n - m, k)[n - m]
    direct = convolution_S(m, n, k)
    if value != direct:
        raise VerificationError(f"convolution_closed: W gives {value}, DP gives {direct} (m={m}, n={n}, k={k})")
    if value.denominator != 1:
        raise VerificationError(f"convolution_closed: non-integer value {value} (m={m}, n={n}, k={k})")
    return value


def _rising(x: Fraction, count: int) -> Fraction:
    return prod((x + i for i in range(count)), start=Fraction(1))


def convolution_series(m: int, n: int, k: int) -> Fraction:
    """S_m(n) from the explicit sum over j of the ultraspherical closed form.

    With r = n - m: (2m)_r sum_j (k/2)^(r-2j) ((k^2+4)/4)^j / (4^j j! (m+1/2)_j (r-2j)!).
    """
    _check(m, n, "convolution_series")
    params = SeqParams(k)
    if n < m:
        return Fraction(0)
    r = n - m
    half_k = Fraction(k, 2)
    quarter_d = Fraction(params.D, 4)
    total = Fraction(0)
    for j in range(r // 2 + 1):
        total += (
            half_k ** (r - 2 * j)
            * quarter_d**j
            / (4**j * factorial(j) * _rising(Fraction(2 * m + 1, 2), j) * factorial(r - 2 * j))
        )
    return _rising(Fraction(2 * m), r) * total


@dataclass(frozen=True)
class ConvolutionRow:
    m: int
    n: int
    k: int
    value: int
    bruteforce: int | None


def convolution_table(
    m_max: int = config.CONVOLUTION_M_MAX,
    n_max: int = config.CONVOLUTION_N_MAX,
    k_max: int = config.CONVOLUTION_K_MAX,
) -> list[ConvolutionRow]:
    """Agreement of all four evaluations on the grid; brute force only where it is cheap."""
    if m_max < 1 or k_max < 1 or n_max < 0:
        raise DomainError(
            f"convolution_table: need m_max, k_max >= 1 and n_max >= 0 (got {m_max}, {k_max}, {n_max})"
        )
    rows = []
    for k in range(1, k_max + 1):
        for m in range(1, m_max + 1):
            for n in range(n_max + 1):
                value = convolution_S(m, n, k)
                closed = convolution_closed(m, n, k)
                series = convolution_series(m, n, k)
                brute = convolution_bruteforce(m, n, k) if n <= config.BRUTE_COMPOSITION_N_MAX else None
                if not value == closed == series or (brute is not None and brute != value):
                    raise VerificationError(
                        f"convolution_table: m={m} n={n} k={k}: dp={value} closed={closed} "
                        f"series={series} brute={brute}"
                    )
                rows.append(ConvolutionRow(m, n, k, value, brute))
    return rows
