"""Orthogonal polynomials of the Fibonacci/Lucas moment functionals.

Polynomials are ascending coefficient lists: [c0, c1, ...] is c0 + c1 x + ...
The functionals are signed for odd alpha, so everything works with monic
polynomials and their norms h_j = L(P_j^2) rather than orthonormal ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from genfib.binomials import fibonomial, luconomial_value
from genfib.errors import DegenerateMomentError, DomainError, VerificationError
from genfib.hankel import (
    MomentHankel,
    filbert_matrix,
    lucas_det_printed,
    moment_hankel,
)
from genfib.linalg import RatMatrix, bareiss_det, exact_inverse, is_integer_matrix
from genfib.sequences import SeqParams, seq

KernelCoeffs = RatMatrix


@dataclass(frozen=True)
class OrthoBasis:
    """Monic P_0..P_n (ascending coefficients) and their norms h_0..h_n."""

    polys: tuple[tuple[Fraction, ...], ...]
    norms: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.polys) - 1


def _axpy(y: list[Fraction], c: Fraction, x: tuple[Fraction, ...]) -> None:
    for i, v in enumerate(x):
        y[i] -= c * v


def monic_basis(mh: MomentHankel) -> OrthoBasis:
    """Gram-Schmidt on 1, x, ..., x^n against the moment functional."""
    polys: list[tuple[Fraction, ...]] = []
    norms: list[Fraction] = []
    for j in range(mh.n + 1):
        p = [Fraction(0)] * j + [Fraction(1)]
        monomial = tuple(p)
        for prev, h in zip(polys, norms):
            _axpy(p, mh.functional(list(monomial), list(prev)) / h, prev)
        p_t = tuple(p)
        h_j = mh.functional(p, p)
        if h_j == 0:
            raise DegenerateMomentError(
                f"monic_basis: norm h_{j} vanishes ({mh.family}, k={mh.k}, alpha={mh.alpha})"
            )
        polys.append(p_t)
        norms.append(h_j)
    return OrthoBasis(tuple(polys), tuple(norms))


def kernel_inverse(basis: OrthoBasis) -> KernelCoeffs:
    """Inverse Hankel matrix from a_{j,k} = sum_r c_j(P_r) c_k(P_r) / h_r."""
    size = basis.n + 1
    a = [[Fraction(0)] * size for _ in range(size)]
    for poly, h in zip(basis.polys, basis.norms):
        if h == 0:
            raise DegenerateMomentError("kernel_inverse: basis has a zero norm")
        for j, cj in enumerate(poly):
            if cj == 0:
                continue
            for m, cm in enumerate(poly):
                a[j][m] += cj * cm / h
    return a


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def qjacobi_coeffs(family: str, k: int, alpha: int, n: int, mode: str = "verbatim") -> list[Fraction]:
    """Coefficients of the degree-n little q-Jacobi polynomial, ascending.

    verbatim: x^j has <n,j> <alpha+n+j-1, n> (-1)^(nj + C(j,2)), with
    fibonomials for the fib family and luconomials for lucas.
    corrected: identical for fib; for lucas the x^j coefficient is
    <n,j>_F * prod_{i<j} L_{alpha+n+i}/L_{alpha+i} * (-1)^(nj + C(j,2)).
    """
    if alpha < 1:
        raise DomainError(f"qjacobi_coeffs: alpha must be >= 1 (alpha={alpha})")
    if n < 0:
        raise DomainError(f"qjacobi_coeffs: n must be >= 0 (n={n})")
    if mode not in ("corrected", "verbatim"):
        raise DomainError(f"qjacobi_coeffs: unknown mode '{mode}'")
    p = SeqParams(k)
    coeffs = []
    for j in range(n + 1):
        s = _sign(n * j + comb(j, 2))
        if family == "fib":
            c = Fraction(fibonomial(p, n, j) * fibonomial(p, alpha + n + j - 1, n))
        elif family == "lucas" and mode == "verbatim":
            c = luconomial_value(p, n, j) * luconomial_value(p, alpha + n + j - 1, n)
        elif family == "lucas":
            ratio = prod(
                (Fraction(seq(p, "lucas", alpha + n + i), seq(p, "lucas", alpha + i)) for i in range(j)),
                start=Fraction(1),
            )
            c = fibonomial(p, n, j) * ratio
        else:
            raise DomainError(f"qjacobi_coeffs: unknown family '{family}'")
        coeffs.append(s * c)
    return coeffs


def _printed_constant(family: str, k: int, alpha: int, j: int) -> Fraction:
    p = SeqParams(k)
    return _sign(alpha * j) * Fraction(seq(p, family, alpha), seq(p, family, alpha + j))


def _gram(mh: MomentHankel, polys: list[list[Fraction]]) -> RatMatrix:
    return [[mh.functional(a, b) for b in polys] for a in polys]


@dataclass(frozen=True)
class GramReport:
    family: str
    k: int
    alpha: int
    zeta: tuple[Fraction, ...]
    printed: tuple[Fraction, ...]
    printed_holds: tuple[bool, ...]
    verbatim_orthogonal: bool
    closed_form_holds: bool | None


def gram_report(family: str, k: int, alpha: int, n_max: int) -> GramReport:
    """Gram matrix of the q-Jacobi polynomials P_0..P_{n_max} against the moment functional.

    Off-diagonal entries must vanish exactly. For the fib family the diagonal
    must also follow zeta_j = (-1)^(alpha j) F_alpha / F_{alpha+2j}. The
    printed constant (-1)^(alpha j) F_alpha / F_{alpha+j} is reported, not
    asserted.
    """
    mh = moment_hankel(family, k, alpha, n_max)
    polys = [qjacobi_coeffs(family, k, alpha, j, mode="corrected") for j in range(n_max + 1)]
    gram = _gram(mh, polys)
    for i in range(n_max + 1):
        for j in range(n_max + 1):
            if i != j and gram[i][j] != 0:
                raise VerificationError(
                    f"gram_report: <P_{i}, P_{j}> = {gram[i][j]} ({family}, k={k}, alpha={alpha})"
                )
    zeta = tuple(gram[j][j] for j in range(n_max + 1))
    printed = tuple(_printed_constant(family, k, alpha, j) for j in range(n_max + 1))

    closed_form_holds = None
    if family == "fib":
        p = SeqParams(k)
        expected = tuple(
            _sign(alpha * j) * Fraction(seq(p, "fib", alpha), seq(p, "fib", alpha + 2 * j))
            for j in range(n_max + 1)
        )
        if zeta != expected:
            raise VerificationError(f"gram_report: fib constants {zeta} != {expected} (k={k}, alpha={alpha})")
        closed_form_holds = True

    verbatim = [qjacobi_coeffs(family, k, alpha, j, mode="verbatim") for j in range(n_max + 1)]
    vgram = _gram(mh, verbatim)
    verbatim_orthogonal = all(
        vgram[i][j] == 0 for i in range(n_max + 1) for j in range(n_max + 1) if i != j
    )
    return GramReport(
        family=family,
        k=k,
        alpha=alpha,
        zeta=zeta,
        printed=printed,
        printed_holds=tuple(z == c for z, c in zip(zeta, printed)),
        verbatim_orthogonal=verbatim_orthogonal,
        closed_form_holds=closed_form_holds,
    )


def norm_product_check(mh: MomentHankel) -> Fraction:
    """prod h_j, checked against the Bareiss determinant of the Hankel matrix."""
    basis = monic_basis(mh)
    product = prod(basis.norms, start=Fraction(1))
    det = bareiss_det(mh.matrix)
    if product != det:
        raise VerificationError(f"norm_product_check: prod h_j = {product} but det = {det}")
    return det


@dataclass(frozen=True)
class LucasHankelRow:
    k: int
    alpha: int
    n: int
    det: Fraction
    det_printed: Fraction
    printed_holds: bool
    inverse: RatMatrix
    has_non_integer: bool
    norms: tuple[Fraction, ...]


def lucas_hankel_report(k: int, alpha: int, n_max: int) -> list[LucasHankelRow]:
    """Exact determinants and inverses of {1/L_{alpha+i+j}} for n = 0..n_max.

    Each row carries the printed determinant formula's verdict, whether the
    inverse has a non-integer entry, and the monic norms h_j of the Lucas
    moment functional.
    """
    if n_max < 0:
        raise DomainError(f"lucas_hankel_report: n_max must be >= 0 (n_max={n_max})")
    rows = []
    for n in range(n_max + 1):
        M = filbert_matrix("lucas", k, alpha, n)
        det = bareiss_det(M)
        inverse = exact_inverse(M)
        printed = lucas_det_printed(k, alpha, n)
        basis = monic_basis(moment_hankel("lucas", k, alpha, n))
        rows.append(
            LucasHankelRow(
                k=k,
                alpha=alpha,
                n=n,
                det=det,
                det_printed=printed,
                printed_holds=printed == det,
                inverse=inverse,
                has_non_integer=not is_integer_matrix(inverse),
                norms=basis.norms,
            )
        )
    return rows
