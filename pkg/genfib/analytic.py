"""Continued fractions, arctan sums, reciprocal sums and the Catalan divisibility check."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import primerange

from genfib import config
from genfib.errors import DomainError, VerificationError
from genfib.exact import QuadRat, constants, power, to_float
from genfib.sequences import SeqParams, fib, lucas, pair_doubling


@dataclass(frozen=True)
class ContinuedFraction:
    k: int
    m: int
    t: int
    quotients: tuple[int, ...]
    sign: int
    value: Fraction

    @property
    def depth(self) -> int:
        return len(self.quotients)

    @property
    def printed_count_holds(self) -> bool:
        """The printed claim that L_m appears m times."""
        return self.depth == self.m


def continued_fraction(k: int, m: int, t: int) -> ContinuedFraction:
    """Expand F_{m(t+1)}/F_{mt} as L_m - s/(L_m - s/(... L_m)), s = (-1)^m.

    Every partial quotient is L_m and there are t of them; each convergent
    is checked against F_{m(i+1)}/F_{mi}.
    """
    if m < 1 or t < 1:
        raise DomainError(f"continued_fraction: m and t must be >= 1 (m={m}, t={t})")
    p = SeqParams(k)
    lm = lucas(p, m)
    s = -1 if m % 2 else 1
    value = Fraction(lm)
    for i in range(1, t + 1):
        if i > 1:
            value = lm - s / value
        if fib(p, m * (i + 1)) != lm * fib(p, m * i) - s * fib(p, m * (i - 1)):
            raise VerificationError(f"continued_fraction: index recursion fails at i={i} (k={k}, m={m})")
        expected = Fraction(fib(p, m * (i + 1)), fib(p, m * i))
        if value != expected:
            raise VerificationError(f"continued_fraction: convergent {i} is {value}, expected {expected}")
    return ContinuedFraction(k, m, t, (lm,) * t, s, value)


@dataclass(frozen=True)
class ArctanReport:
    k: int
    exact_checked: int
    step_max_error: float
    tail_terms: int
    partial_sum: float
    residual: float
    tail_bound: float
    holds: bool


def arctan_suite(
    k: int,
    m_max: int = config.ARCTAN_EXACT_M_MAX,
    tail_terms: int = config.ARCTAN_TAIL_TERMS,
    tolerance: float = config.FLOAT_TOLERANCE,
) -> ArctanReport:
    """Exact step identity for m <= m_max plus a float check of the telescoped series.

    arctan(1/F_{2m}) - arctan(1/F_{2m+2}) = arctan(k/F_{2m+1}) rests on
    k[1 + F_{2m+2}F_{2m}] = k F_{2m+1}^2, checked exactly. The series
    sum_{n=0..N} arctan(k/F_{2n+3}) approaches arctan(1/k) with remainder
    arctan(1/F_{2N+4}).
    """
    if m_max < 1 or tail_terms < 1:
        raise DomainError(f"arctan_suite: m_max and tail_terms must be >= 1 ({m_max}, {tail_terms})")
    p = SeqParams(k)
    a, b = fib(p, 0), fib(p, 1)
    for m in range(m_max + 1):
        # a = F_{2m}, b = F_{2m+1}
        c = k * b + a
        if k * (1 + c * a) != k * b * b:
            raise VerificationError(f"arctan_suite: step identity fails at m={m} (k={k})")
        a, b = c, k * c + b

    step_error = 0.0
    for m in range(1, min(m_max, 30) + 1):
        lhs = math.atan(1 / fib(p, 2 * m)) - math.atan(1 / fib(p, 2 * m + 2))
        step_error = max(step_error, abs(lhs - math.atan(k / fib(p, 2 * m + 1))))

    partial = math.fsum(math.atan(k / fib(p, 2 * n + 3)) for n in range(tail_terms + 1))
    residual = abs(partial - math.atan(1 / k))
    tail_bound = math.atan(1 / fib(p, 2 * tail_terms + 4))
    return ArctanReport(
        k=k,
        exact_checked=m_max + 1,
        step_max_error=step_error,
        tail_terms=tail_terms,
        partial_sum=partial,
        residual=residual,
        tail_bound=tail_bound,
        holds=residual < tolerance and step_error < tolerance,
    )


@dataclass(frozen=True)
class ReciprocalSums:
    k: int
    partials: tuple[Fraction, ...]
    limit: QuadRat

    def limit_decimal(self, digits: int = config.DEFAULT_DIGITS) -> str:
        return to_float(self.limit, digits)


def reciprocal_sum(k: int, n_max: int) -> ReciprocalSums:
    """Partial sums sum_{j=0..n} 1/F_{2^j} for n = 0..n_max and their limit.

    For n >= 1 each partial sum equals (k+2)/k - F_{2^n-1}/F_{2^n}. The limit
    (k+2)/k - e^(-theta) is checked against 1 + e^(-theta) coth(theta) in
    Q(sqrt(k^2+4)).
    """
    if n_max < 0:
        raise DomainError(f"reciprocal_sum: n_max must be >= 0 (n_max={n_max})")
    p = SeqParams(k)
    head = Fraction(k + 2, k)
    partials = []
    total = Fraction(0)
    for n in range(n_max + 1):
        before, at, _ = pair_doubling(p, 2**n - 1)
        total += Fraction(1, at)
        if n >= 1 and total != head - Fraction(before, at):
            raise VerificationError(f"reciprocal_sum: telescoping fails at n={n} (k={k})")
        partials.append(total)

    e_theta, _, D = constants(k)
    e_inv = power(e_theta, -1)
    limit = head - e_inv
    coth = QuadRat(0, Fraction(1, k), D)
    if limit != 1 + e_inv * coth:
        raise VerificationError(f"reciprocal_sum: limit forms disagree (k={k})")
    return ReciprocalSums(k, tuple(partials), limit)


@dataclass(frozen=True)
class DivisibilityReport:
    k: int
    n_max: int
    primes: tuple[int, ...]
    hits: int


def catalan_divisibility(
    k: int,
    n_max: int = config.SWEEP_N_RANGE[1],
    primes_below: int = config.CATALAN_PRIMES_BELOW,
) -> DivisibilityReport:
    """For sampled primes p: p | F_n and p | F_{n+j} or F_{n-j} imply p | F_j."""
    p = SeqParams(k)
    primes = tuple(primerange(2, primes_below))
    hits = 0
    for q in primes:
        for n in range(1, n_max + 1):
            if fib(p, n) % q:
                continue
            for j in range(1, n_max + 1):
                if fib(p, n + j) % q and fib(p, n - j) % q:
                    continue
                hits += 1
                if fib(p, j) % q:
                    raise VerificationError(f"catalan_divisibility: {q} | F_{n} but not F_{j} (k={k})")
    return DivisibilityReport(k, n_max, primes, hits)
