"""Descent solvers for n^2(k^2+4) +- 4 = square and y^2 - kxy - x^2 = +-1.

Both descents strictly decrease x and stop at a base solution; the number
of steps gives the index of the generalized Fibonacci number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from sympy import integer_nthroot

from genfib import config
from genfib.errors import BoundExceededError, DescentError, DomainError, VerificationError
from genfib.sequences import SeqParams, fib, lucas

_LOG_PHI = math.log((1 + math.sqrt(5)) / 2)


def is_square(v: int) -> Optional[int]:
    """Integer r with r*r == v, or None."""
    if v < 0:
        raise DomainError(f"is_square: v must be >= 0 (v={v})")
    root, exact = integer_nthroot(v, 2)
    return int(root) if exact else None


def _depth_cap(x: int) -> int:
    return int(config.DESCENT_LOG_FACTOR * math.log(max(x, 2)) / _LOG_PHI) + config.DESCENT_SLACK


@dataclass(frozen=True)
class DescentTrace:
    """Every visited (x, y, sign), origin first; `swapped` marks the -1 to +1 swap."""

    k: int
    origin: tuple[int, int]
    steps: tuple[tuple[int, int, int], ...]
    terminal: tuple[int, int]
    index: Optional[int]
    swapped: bool = False

    def pairs(self) -> list[list[int]]:
        return [[x, y] for x, y, _ in self.steps]


@dataclass(frozen=True)
class Classification:
    k: int
    n: int
    member: bool
    index: Optional[int] = None
    companion: Optional[int] = None
    trace: Optional[DescentTrace] = None
    discriminants: tuple[int, int] = (0, 0)
    within_theorem: bool = True


def _classify_descent(k: int, n: int, y: int, sign: int) -> DescentTrace:
    D = k * k + 4
    x = n
    steps = [(x, y, sign)]
    cap = _depth_cap(n)
    while (x, y) != (1, k):
        if len(steps) > cap:
            raise DescentError(f"classify_general_fib: descent exceeded {cap} steps (k={k}, n={n})")
        if (y - k * x) % 2 or (k * y - D * x) % 2:
            raise DescentError(f"classify_general_fib: non-integral step from ({x}, {y}) (k={k})")
        nx, ny = (y - k * x) // 2, abs(k * y - D * x) // 2
        sign = -sign
        if not 1 <= nx < x or ny * ny - D * nx * nx != sign:
            raise DescentError(f"classify_general_fib: descent left the curve at ({nx}, {ny}) (k={k}, n={n})")
        x, y = nx, ny
        steps.append((x, y, sign))
    return DescentTrace(k, (n, steps[0][1]), tuple(steps), (x, y), len(steps))


def classify_general_fib(k: int, n: int, experimental: bool = False) -> Classification:
    """Is n a generalized Fibonacci number F_m(k)? Decided by n^2(k^2+4) +- 4 being square.

    Requires k odd and > 1; `experimental` admits even k, with results marked
    outside the theorem.
    """
    if k <= 1:
        raise DomainError(f"classify_general_fib: k must be > 1 (k={k})")
    if k % 2 == 0 and not experimental:
        raise DomainError(f"classify_general_fib: k must be odd (k={k}); pass experimental to allow even k")
    if n < 1:
        raise DomainError(f"classify_general_fib: n must be >= 1 (n={n})")
    D = k * k + 4
    discriminants = (n * n * D + 4, n * n * D - 4)
    within = k % 2 == 1
    for sign, disc in zip((4, -4), discriminants):
        y = is_square(disc)
        if y is None:
            continue
        try:
            trace = _classify_descent(k, n, y, sign)
        except DescentError:
            if within:
                raise
            return Classification(k, n, True, discriminants=discriminants, within_theorem=False)
        m = trace.index
        params = SeqParams(k)
        if fib(params, m) != n or lucas(params, m) != y:
            raise VerificationError(f"classify_general_fib: F_{m}({k}) != {n} or L_{m}({k}) != {y}")
        return Classification(k, n, True, m, y, trace, discriminants, within)
    return Classification(k, n, False, discriminants=discriminants, within_theorem=within)


@dataclass(frozen=True)
class PellSolution:
    """(x, y) = (F_n, F_{n+1}) on y^2 - kxy - x^2 = sign."""

    x: int
    y: int
    n: int
    sign: int


@dataclass(frozen=True)
class Pm1Result:
    solution: PellSolution
    trace: DescentTrace
    within_theorem: bool = field(default=True)


def _curve(k: int, x: int, y: int) -> int:
    return y * y - k * x * y - x * x


def solve_pm1(k: int, x: int, y: int) -> Optional[Pm1Result]:
    """Recover n with (x, y) = (F_n, F_{n+1}) by descent, or None if (x, y) is off both curves.

    On the +1 curve (x, y) -> ((k^2+1)x - ky, y - kx) descends to (F_2, F_3);
    a point on the -1 curve is first swapped to (y, x + ky).
    """
    if k < 1:
        raise DomainError(f"solve_pm1: k must be >= 1 (k={k})")
    if x < 1 or y < 1:
        raise DomainError(f"solve_pm1: x and y must be >= 1 (x={x}, y={y})")
    sign = _curve(k, x, y)
    if sign not in (1, -1):
        return None
    swapped = sign == -1
    cx, cy = (y, x + k * y) if swapped else (x, y)
    base = (k, k * k + 1)
    steps = [(cx, cy, 1)]
    cap = _depth_cap(cx)
    while (cx, cy) != base:
        if len(steps) > cap:
            raise DescentError(f"solve_pm1: descent exceeded {cap} steps (k={k}, x={x}, y={y})")
        nx, ny = (k * k + 1) * cx - k * cy, cy - k * cx
        if not 1 <= nx < cx or _curve(k, nx, ny) != 1:
            raise DescentError(f"solve_pm1: descent left the +1 curve at ({nx}, {ny}) (k={k})")
        cx, cy = nx, ny
        steps.append((cx, cy, 1))
    index = 2 + 2 * (len(steps) - 1)
    if swapped:
        index -= 1
    params = SeqParams(k)
    if (fib(params, index), fib(params, index + 1)) != (x, y):
        raise VerificationError(f"solve_pm1: ({x}, {y}) is not (F_{index}, F_{index + 1}) at k={k}")
    trace = DescentTrace(k, (x, y), tuple(steps), (cx, cy), index, swapped)
    return Pm1Result(PellSolution(x, y, index, sign), trace, within_theorem=k > 1)


def brute_force_pm1(k: int, x_bound: int) -> list[tuple[int, int, int]]:
    """All (x, y, sign) with 1 <= x <= x_bound, y >= 1, by discriminant squareness."""
    if x_bound > config.BRUTE_FORCE_MAX_BOUND:
        raise BoundExceededError(
            f"brute_force_pm1: x_bound={x_bound} exceeds {config.BRUTE_FORCE_MAX_BOUND}"
        )
    D = k * k + 4
    found = []
    for x in range(1, x_bound + 1):
        hits = []
        for sign in (1, -1):
            r = is_square(x * x * D + 4 * sign)
            if r is not None and (k * x + r) % 2 == 0:
                hits.append(((k * x + r) // 2, sign))
        for y, sign in sorted(hits):
            found.append((x, y, sign))
    return found


def enumerate_pm1(k: int, x_bound: int) -> list[PellSolution]:
    """(F_n, F_{n+1}) with sign (-1)^n for n >= 1 and F_n <= x_bound."""
    if x_bound < 1:
        raise DomainError(f"enumerate_pm1: x_bound must be >= 1 (x_bound={x_bound})")
    params = SeqParams(k)
    solutions = []
    n = 1
    while fib(params, n) <= x_bound:
        solutions.append(PellSolution(fib(params, n), fib(params, n + 1), n, -1 if n % 2 else 1))
        n += 1
    if x_bound <= config.BRUTE_FORCE_MAX_BOUND:
        brute = brute_force_pm1(k, x_bound)
        listed = [(s.x, s.y, s.sign) for s in solutions]
        if sorted(listed) != brute:
            raise VerificationError(f"enumerate_pm1: generated pairs differ from brute force (k={k}, bound={x_bound})")
    return solutions


@dataclass(frozen=True)
class TheoremScan:
    k: int
    bound: int
    found: tuple[int, ...]
    generated: tuple[int, ...]

    @property
    def agrees(self) -> bool:
        return self.found == self.generated


def theorem_scan(k: int, bound: int = config.CLASSIFY_SCAN_BOUND) -> TheoremScan:
    """All n <= bound with n^2(k^2+4) +- 4 square, against the F_m(k) that fit under the bound."""
    if bound > config.CLASSIFY_SCAN_BOUND:
        raise BoundExceededError(f"theorem_scan: bound={bound} exceeds {config.CLASSIFY_SCAN_BOUND}")
    params = SeqParams(k)
    D = params.D
    found = tuple(
        n for n in range(1, bound + 1)
        if is_square(n * n * D + 4) is not None or is_square(n * n * D - 4) is not None
    )
    generated = []
    m = 1
    while fib(params, m) <= bound:
        if not generated or generated[-1] != fib(params, m):
            generated.append(fib(params, m))
        m += 1
    return TheoremScan(k, bound, found, tuple(generated))
