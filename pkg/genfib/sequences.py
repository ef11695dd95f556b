"""Generalized Fibonacci and Lucas numbers F_n, L_n for k = 2 sinh(theta).

Three independent evaluations are provided: the three-term recurrence
(``fib``/``lucas``), index doubling (``pair_doubling``) and the closed form
in Q(sqrt(k^2 + 4)) (``closed_form``). ``triple_agreement`` cross-checks them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from genfib import config
from genfib.errors import DomainError, VerificationError
from genfib.exact import QuadRat, constants, power


@dataclass(frozen=True)
class SeqParams:
    """Integer parameter k = 2 sinh(theta) and the discriminant D = k^2 + 4."""

    k: int
    D: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise DomainError(f"SeqParams: k must be an integer >= 1 (k={self.k!r})")
        object.__setattr__(self, "D", self.k * self.k + 4)


def _check_family(family: str) -> None:
    if family not in ("fib", "lucas"):
        raise DomainError(f"unknown family '{family}' (expected fib or lucas)")


@lru_cache(maxsize=config.CACHE_SIZE)
def _recurrence(k: int, n: int, first: int, second: int) -> int:
    """Term n >= 0 of y_{m+1} = k*y_m + y_{m-1} with y_0 = first, y_1 = second."""
    a, b = first, second
    for _ in range(n):
        a, b = b, k * b + a
    return a


def fib(params: SeqParams, n: int) -> int:
    """F_n by the recurrence; F_0 = 0, F_1 = 1, F_{-n} = (-1)^(n-1) F_n."""
    if n >= 0:
        return _recurrence(params.k, n, 0, 1)
    m = -n
    value = _recurrence(params.k, m, 0, 1)
    return value if m % 2 == 1 else -value


def lucas(params: SeqParams, n: int) -> int:
    """L_n by the recurrence; L_0 = 2, L_1 = k, L_{-n} = (-1)^n L_n."""
    if n >= 0:
        return _recurrence(params.k, n, 2, params.k)
    m = -n
    value = _recurrence(params.k, m, 2, params.k)
    return value if m % 2 == 0 else -value


def seq(params: SeqParams, family: str, n: int) -> int:
    _check_family(family)
    return fib(params, n) if family == "fib" else lucas(params, n)


def pair_doubling(params: SeqParams, n: int) -> tuple[int, int, int]:
    """Return (F_n, F_{n+1}, L_n) with O(log n) big-integer steps.

    Uses F_{2m} = F_m L_m, F_{2m+1} = F_{m+1}^2 + F_m^2 and
    L_{2m} = L_m^2 - 2(-1)^m, walking the bits of n from the top.
    """
    if n < 0:
        raise DomainError(f"pair_doubling: n must be >= 0 (n={n})")
    k = params.k
    m, f0, f1, l0 = 0, 0, 1, 2
    for bit in bin(n)[2:] if n else "":
        f0, f1, l0 = f0 * l0, f1 * f1 + f0 * f0, l0 * l0 - 2 * (-1) ** m
        m *= 2
        if 2 * f1 - k * f0 != l0:
            raise VerificationError(f"pair_doubling: L_{m} disagrees with 2F_{m+1} - kF_{m} at k={k}")
        if bit == "1":
            f0, f1 = f1, k * f1 + f0
            m += 1
            l0 = 2 * f1 - k * f0
    return f0, f1, l0


def fib_lucas_pair(params: SeqParams, n: int) -> tuple[int, int]:
    """(F_n, L_n) for any integer n via doubling plus the negative-index rules."""
    m = abs(n)
    f, _, lu = pair_doubling(params, m)
    if n < 0:
        f = f if m % 2 == 1 else -f
        lu = lu if m % 2 == 0 else -lu
    return f, lu


def closed_form(params: SeqParams, family: str, n: int) -> QuadRat:
    """Field evaluation F_n = e^((n-1)theta)(1 - q^n)/(1 - q), L_n = e^(n theta)(1 + q^n)."""
    _check_family(family)
    e_theta, q, _ = constants(params.k)
    qn = power(q, n)
    if family == "fib":
        return power(e_theta, n - 1) * (1 - qn) / (1 - q)
    return power(e_theta, n) * (1 + qn)


def triple_agreement(params: SeqParams, family: str, n: int) -> int:
    """Evaluate term n three ways and raise VerificationError on any disagreement."""
    direct = seq(params, family, n)
    f, lu = fib_lucas_pair(params, n)
    doubled = f if family == "fib" else lu
    field_value = closed_form(params, family, n)
    if doubled != direct or field_value != direct:
        raise VerificationError(
            f"triple_agreement: {family} n={n} k={params.k}: "
            f"recurrence={direct} doubling={doubled} closed_form={field_value}"
        )
    return direct


def _hyperbolic_sum(params: SeqParams, family: str, n: int) -> Fraction:
    half_k = Fraction(params.k, 2)
    quarter_d = Fraction(params.D, 4)
    if family == "fib":
        return sum(
            (comb(n + 1, 2 * j + 1) * half_k ** (n - 2 * j) * quarter_d**j for j in range(n // 2 + 1)),
            Fraction(0),
        )
    return sum(
        (comb(n, 2 * j) * half_k ** (n - 2 * j) * quarter_d**j for j in range(n // 2 + 1)),
        Fraction(0),
    )


def explicit_hyperbolic(params: SeqParams, family: str, n: int, mode: str = "corrected") -> Fraction:
    """Binomial expansion of F/L in powers of sinh(theta) = k/2 and cosh^2(theta) = D/4.

    corrected: the Fibonacci sum equals F_{n+1}, and twice the Lucas sum
    equals L_n; both are asserted. verbatim: the sums as printed (claimed
    to be F_n and L_n), returned without assertion.
    """
    _check_family(family)
    if n < 0:
        raise DomainError(f"explicit_hyperbolic: n must be >= 0 (n={n})")
    if mode not in ("corrected", "verbatim"):
        raise DomainError(f"explicit_hyperbolic: unknown mode '{mode}'")
    value = _hyperbolic_sum(params, family, n)
    if mode == "verbatim":
        return value
    if family == "fib":
        target = fib(params, n + 1)
    else:
        value = 2 * value
        target = lucas(params, n)
    if value != target:
        raise VerificationError(
            f"explicit_hyperbolic: {family} n={n} k={params.k} gives {value}, expected {target}"
        )
    return value


def hyperbolic_verbatim_verdict(params: SeqParams, family: str, n: int) -> dict:
    """Printed hyperbolic sum against the term it claims to equal."""
    printed = explicit_hyperbolic(params, family, n, mode="verbatim")
    claimed = fib(params, n) if family == "fib" else lucas(params, n)
    return {"family": family, "k": params.k, "n": n, "printed": printed, "target": claimed,
            "holds": printed == claimed}


def hyperbolic_erratum_l2(params: SeqParams) -> dict:
    """Compare L_2 with cosh(2 theta), evaluated exactly in the field."""
    e_theta, _, _ = constants(params.k)
    cosh_2theta = (power(e_theta, 2) + power(e_theta, -2)) / 2
    l2 = lucas(params, 2)
    return {"k": params.k, "L2": l2, "cosh_2theta": cosh_2theta.as_rational(),
            "holds": cosh_2theta == l2, "ratio": Fraction(l2) / cosh_2theta.as_rational()}


Matrix2 = tuple[tuple[int, int], tuple[int, int]]


def _mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def matrix_power(params: SeqParams, n: int) -> Matrix2:
    """[[k, 1], [1, 0]]^n, checked against [[F_{n+1}, F_n], [F_n, F_{n-1}]] and det = (-1)^n."""
    if n < 1:
        raise DomainError(f"matrix_power: n must be >= 1 (n={n})")
    base: Matrix2 = ((fib(params, 2), fib(params, 1)), (fib(params, 1), fib(params, 0)))
    result: Matrix2 = ((1, 0), (0, 1))
    e = n
    while e:
        if e & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        e >>= 1
    expected = ((fib(params, n + 1), fib(params, n)), (fib(params, n), fib(params, n - 1)))
    det = result[0][0] * result[1][1] - result[0][1] * result[1][0]
    if result != expected or det != (-1) ** n:
        raise VerificationError(f"matrix_power: n={n} k={params.k} gives {result}, det {det}")
    return result
