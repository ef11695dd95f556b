"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``Fraction`` (ints are accepted on input).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm, prod
from typing import Sequence

from genfib.errors import DomainError, SingularMatrixError, VerificationError

RatMatrix = list[list[Fraction]]


def _check_square(M: Sequence[Sequence], op: str) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise DomainError(f"{op}: matrix is not square ({n} rows)")
    return n


def identity(n: int) -> RatMatrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> RatMatrix:
    cols = len(B[0]) if B else 0
    return [
        [sum((Fraction(A[i][t]) * B[t][j] for t in range(len(B))), Fraction(0)) for j in range(cols)]
        for i in range(len(A))
    ]


def is_integer_matrix(M: Sequence[Sequence]) -> bool:
    return all(Fraction(v).denominator == 1 for row in M for v in row)


def bareiss_det(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free elimination.

    Each row is scaled to integers by its common denominator, the integer
    matrix is reduced with Bareiss' exact division by the previous pivot, and
    the row scales are divided back out.
    """
    n = _check_square(M, "bareiss_det")
    if n == 0:
        return Fraction(1)
    scales = []
    A = []
    for row in M:
        row = [Fraction(v) for v in row]
        scale = lcm(*(v.denominator for v in row))
        scales.append(scale)
        A.append([int(v * scale) for v in row])

    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1], prod(scales))


def exact_inverse(M: Sequence[Sequence]) -> RatMatrix:
    """Gauss-Jordan inverse over Fraction; the product with M is checked against I."""
    n = _check_square(M, "exact_inverse")
    aug = [[Fraction(v) for v in row] + identity(n)[i] for i, row in enumerate(M)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"exact_inverse: {n}x{n} matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    inverse = [row[n:] for row in aug]
    if mat_mul(M, inverse) != identity(n):
        raise VerificationError("exact_inverse: M times its inverse is not the identity")
    return inverse


def solve_consistent(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One exact solution of A x = b, free variables set to zero; None if inconsistent."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [[Fraction(v) for v in A[r]] + [Fraction(b[r])] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        p = aug[r][c]
        aug[r] = [v / p for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [a - factor * v for a, v in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(v == 0 for v in aug[i][:cols]) and aug[i][cols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x
