"""Moment sequences, Hankel matrices and Filbert closed forms.

The moment functional of a family sends x^j to s_j = F_a/F_{a+j}
(or L_a/L_{a+j}); its Hankel matrix is F_a times the Filbert matrix
{1/F_{a+i+j}}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from genfib.binomials import fibonomial, luconomial_value
from genfib.errors import DomainError, VerificationError
from genfib.linalg import RatMatrix, bareiss_det, exact_inverse, is_integer_matrix
from genfib.sequences import SeqParams, seq


def _parity_sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check_alpha(alpha: int, op: str) -> None:
    if alpha < 1:
        raise DomainError(f"{op}: alpha must be >= 1 (alpha={alpha})")


def _check_order(n: int, op: str) -> None:
    if n < 0:
        raise DomainError(f"{op}: n must be >= 0 (n={n})")


def moments(family: str, k: int, alpha: int, count: int) -> list[Fraction]:
    """First `count` moments s_j = F_alpha/F_{alpha+j} (or the Lucas analogue)."""
    _check_alpha(alpha, "moments")
    params = SeqParams(k)
    base = seq(params, family, alpha)
    return [Fraction(base, seq(params, family, alpha + j)) for j in range(count)]


@dataclass(frozen=True)
class MomentHankel:
    """Moments s_0..s_2n of one family/alpha and the (n+1)x(n+1) Hankel matrix."""

    family: str
    k: int
    alpha: int
    n: int
    moments: tuple[Fraction, ...]

    @property
    def matrix(self) -> RatMatrix:
        return [[self.moments[i + j] for j in range(self.n + 1)] for i in range(self.n + 1)]

    @property
    def base(self) -> int:
        """F_alpha or L_alpha, the factor between the Hankel and reciprocal matrices."""
        return seq(SeqParams(self.k), self.family, self.alpha)

    def reciprocal_matrix(self) -> RatMatrix:
        """{1 / F_{alpha+i+j}} (or with L), i.e. the Hankel matrix over F_alpha."""
        base = self.base
        return [[v / base for v in row] for row in self.matrix]

    def functional(self, p: list[Fraction], r: list[Fraction]) -> Fraction:
        """Moment functional applied to the product of two coefficient lists (ascending)."""
        if len(p) + len(r) - 1 > len(self.moments):
            raise DomainError(
                f"MomentHankel: degree {len(p) + len(r) - 2} exceeds available moments ({len(self.moments)})"
            )
        return sum(
            (Fraction(a) * b * self.moments[i + j] for i, a in enumerate(p) for j, b in enumerate(r)),
            Fraction(0),
        )


def moment_hankel(family: str, k: int, alpha: int, n: int) -> MomentHankel:
    _check_order(n, "moment_hankel")
    return MomentHankel(family, k, alpha, n, tuple(moments(family, k, alpha, 2 * n + 1)))


def filbert_matrix(family: str, k: int, alpha: int, n: int) -> RatMatrix:
    """{1 / F_{alpha+i+j} : 0 <= i, j <= n} (or the Lucas analogue)."""
    _check_alpha(alpha, "filbert_matrix")
    _check_order(n, "filbert_matrix")
    params = SeqParams(k)
    return [[Fraction(1, seq(params, family, alpha + i + j)) for j in range(n + 1)] for i in range(n + 1)]


def filbert_inverse_closed(k: int, alpha: int, n: int) -> list[list[int]]:
    """Integer inverse of the generalized Filbert matrix from its product formula."""
    _check_alpha(alpha, "filbert_inverse_closed")
    _check_order(n, "filbert_inverse_closed")
    p = SeqParams(k)
    rows = []
    for j in range(n + 1):
        row = []
        for l in range(n + 1):
            s = _parity_sign((alpha + j + l) * n - comb(j, 2) - comb(l, 2))
            row.append(
                s
                * seq(p, "fib", alpha + j + l)
                * fibonomial(p, alpha + n + j, n - l)
                * fibonomial(p, alpha + n + l, n - j)
                * fibonomial(p, alpha + j + l - 1, j)
                * fibonomial(p, alpha + j + l - 1, l)
            )
        rows.append(row)
    return rows


def filbert_det_closed(k: int, alpha: int, n: int, mode: str = "corrected") -> Fraction:
    """Closed-form determinant of {1/F_{alpha+i+j}}.

    corrected: (-1)^(alpha C(n+1,2)) / F_alpha * prod 1/(F_{alpha+2j} <alpha+2j-1, j>^2).
    verbatim: the printed expression, with F_alpha^(-n) and the fibonomial unsquared.
    """
    _check_alpha(alpha, "filbert_det_closed")
    _check_order(n, "filbert_det_closed")
    if mode not in ("corrected", "verbatim"):
        raise DomainError(f"filbert_det_closed: unknown mode '{mode}'")
    p = SeqParams(k)
    f_alpha = seq(p, "fib", alpha)
    value = Fraction(_parity_sign(alpha * comb(n + 1, 2)))
    if mode == "corrected":
        value /= f_alpha
    else:
        value /= Fraction(f_alpha) ** n
    for j in range(1, n + 1):
        binom = fibonomial(p, alpha + 2 * j - 1, j)
        value /= seq(p, "fib", alpha + 2 * j) * (binom * binom if mode == "corrected" else binom)
    return value


def lucas_det_printed(k: int, alpha: int, n: int) -> Fraction:
    """The printed Lucas determinant formula, with luconomials in place of fibonomials."""
    p = SeqParams(k)
    value = Fraction(_parity_sign(alpha * comb(n + 1, 2))) / Fraction(seq(p, "lucas", alpha)) ** n
    for j in range(1, n + 1):
        value /= seq(p, "lucas", alpha + 2 * j) * luconomial_value(p, alpha + 2 * j - 1, j)
    return value


@dataclass(frozen=True)
class FilbertCheck:
    k: int
    alpha: int
    n: int
    det: Fraction
    det_corrected: Fraction
    det_verbatim: Fraction
    inverse: list[list[int]]
    integral: bool

    @property
    def verbatim_factor(self) -> Fraction:
        """Ratio verbatim/true determinant (1 when the printed form holds)."""
        return self.det_verbatim / self.det


def filbert_check(k: int, alpha: int, n: int) -> FilbertCheck:
    """Closed forms for the Filbert inverse and determinant against the exact oracle."""
    M = filbert_matrix("fib", k, alpha, n)
    det = bareiss_det(M)
    closed_inverse = filbert_inverse_closed(k, alpha, n)
    oracle_inverse = exact_inverse(M)
    if oracle_inverse != closed_inverse:
        raise VerificationError(f"filbert_check: closed inverse differs from oracle at k={k} alpha={alpha} n={n}")
    corrected = filbert_det_closed(k, alpha, n, "corrected")
    if corrected != det:
        raise VerificationError(f"filbert_check: corrected det {corrected} != oracle {det} (k={k} alpha={alpha} n={n})")
    inverse_det = bareiss_det(closed_inverse)
    if det * inverse_det != 1:
        raise VerificationError(f"filbert_check: det * det(inverse) != 1 (k={k} alpha={alpha} n={n})")
    return FilbertCheck(
        k=k,
        alpha=alpha,
        n=n,
        det=det,
        det_corrected=corrected,
        det_verbatim=filbert_det_closed(k, alpha, n, "verbatim"),
        inverse=closed_inverse,
        integral=is_integer_matrix(closed_inverse),
    )


