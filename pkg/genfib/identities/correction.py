"""Fit corrected right-hand sides for product identities that fail as printed.

An ansatz is a finite list of terms c * k^p * (-1)^n * prod Z_{n+r}, with Z
a Fibonacci or Lucas number. The unknown rational coefficients c are found
by exact row reduction over sample instances spread across several k and n,
then re-verified on a disjoint range.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Optional, Sequence

from genfib import config
from genfib.errors import UnderdeterminedAnsatzError
from genfib.linalg import solve_consistent
from genfib.sequences import SeqParams, seq

LhsFn = Callable[[SeqParams, int], Fraction]


@dataclass(frozen=True)
class AnsatzTerm:
    k_power: int
    factors: tuple[tuple[str, int], ...]
    alternating: bool = True

    def evaluate(self, params: SeqParams, n: int) -> int:
        value = params.k**self.k_power
        for family, shift in self.factors:
            value *= seq(params, family, n + shift)
        if self.alternating and n % 2:
            value = -value
        return value

    def monomial(self) -> str:
        parts = []
        for (family, shift), power in _collect(self.factors).items():
            letter = "F" if family == "fib" else "L"
            index = "n" if shift == 0 else f"n{shift:+d}"
            parts.append(f"{letter}_{{{index}}}" + (f"^{power}" if power > 1 else ""))
        return " ".join(parts)


def _collect(factors: Sequence[tuple[str, int]]) -> dict[tuple[str, int], int]:
    counts: dict[tuple[str, int], int] = {}
    for f in sorted(factors, key=lambda x: (x[1], x[0])):
        counts[f] = counts.get(f, 0) + 1
    return counts


def linear_ansatz(shifts: Sequence[int], k_degree: int, family: str = "fib") -> tuple[AnsatzTerm, ...]:
    """Terms k^p (-1)^n Z_{n+r} for p <= k_degree and r in shifts."""
    return tuple(
        AnsatzTerm(p, ((family, r),)) for r in shifts for p in range(k_degree + 1)
    )


def quadratic_ansatz(shifts: Sequence[int], k_degree: int, family: str = "fib") -> tuple[AnsatzTerm, ...]:
    """Terms k^p (-1)^n Z_{n+r} Z_{n+s} for r <= s in shifts."""
    return tuple(
        AnsatzTerm(p, ((family, r), (family, s)))
        for r, s in combinations_with_replacement(shifts, 2)
        for p in range(k_degree + 1)
    )


def _format_kpoly(coeffs: dict[int, Fraction]) -> str:
    pieces = []
    for p in sorted(coeffs, reverse=True):
        c = coeffs[p]
        if c == 0:
            continue
        mono = "" if p == 0 else ("k" if p == 1 else f"k^{p}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class CorrectionFit:
    """Fitted right-hand side: nonzero (term, coefficient) pairs."""

    terms: tuple[tuple[AnsatzTerm, Fraction], ...]
    samples: int
    checked: int

    def rhs(self, params: SeqParams, n: int) -> Fraction:
        return sum((c * t.evaluate(params, n) for t, c in self.terms), Fraction(0))

    def coefficients(self) -> dict[tuple[int, tuple[tuple[str, int], ...]], Fraction]:
        return {(t.k_power, t.factors): c for t, c in self.terms}

    @property
    def text(self) -> str:
        groups: dict[str, dict[int, Fraction]] = defaultdict(dict)
        alternating = any(t.alternating for t, _ in self.terms)
        for t, c in self.terms:
            groups[t.monomial()][t.k_power] = c
        inner = []
        for mono, poly in groups.items():
            coeff = _format_kpoly(poly)
            if coeff == "1":
                inner.append(mono)
            elif coeff == "-1":
                inner.append(f"-{mono}")
            elif len([c for c in poly.values() if c]) > 1:
                inner.append(f"({coeff}) {mono}")
            else:
                inner.append(f"{coeff} {mono}")
        body = " + ".join(inner).replace("+ -", "- ")
        return f"(-1)^n [{body}]" if alternating else body


def correction_solve(
    lhs: LhsFn,
    ansatz: Sequence[AnsatzTerm],
    k_fit: tuple[int, int] = config.CORRECTION_FIT_K,
    n_fit: tuple[int, int] = config.CORRECTION_FIT_N,
    k_check: Optional[tuple[int, int]] = None,
    n_check: tuple[int, int] = config.CORRECTION_CHECK_N,
) -> Optional[CorrectionFit]:
    """Fit ansatz coefficients to `lhs`, then verify on a disjoint range.

    Returns None when the sample system is inconsistent or when the fitted
    right-hand side fails anywhere on the check range.
    """
    if not ansatz:
        raise UnderdeterminedAnsatzError("correction_solve: empty ansatz")
    samples = [(k, n) for k in range(k_fit[0], k_fit[1] + 1) for n in range(n_fit[0], n_fit[1] + 1)]
    if len(samples) < len(ansatz):
        raise UnderdeterminedAnsatzError(
            f"correction_solve: {len(ansatz)} terms but only {len(samples)} samples"
        )
    A, b = [], []
    for k, n in samples:
        p = SeqParams(k)
        A.append([t.evaluate(p, n) for t in ansatz])
        b.append(lhs(p, n))
    solution = solve_consistent(A, b)
    if solution is None:
        return None
    fit = CorrectionFit(
        terms=tuple((t, c) for t, c in zip(ansatz, solution) if c != 0),
        samples=len(samples),
        checked=0,
    )

    if k_check is None:
        k_check = (k_fit[0], k_fit[1] + 2) if k_fit[0] != k_fit[1] else k_fit
    checked = 0
    for k in range(k_check[0], k_check[1] + 1):
        p = SeqParams(k)
        for n in list(range(n_fit[0], n_fit[1] + 1)) + list(range(n_check[0], n_check[1] + 1)):
            if fit.rhs(p, n) != lhs(p, n):
                return None
            checked += 1
    return CorrectionFit(terms=fit.terms, samples=fit.samples, checked=checked)
