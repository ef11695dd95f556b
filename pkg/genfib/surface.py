"""Positive points on the cubic surface z^3 - k^3 y^3 - x^3 = 3kxyz.

z^3 - (ky)^3 - x^3 - 3(ky)xz factors as (z - ky - x) times a form that is
positive for positive arguments, so the surface meets the positive octant
exactly along z = x + ky.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import integer_nthroot

from genfib import config
from genfib.errors import BoundExceededError, VerificationError
from genfib.sequences import SeqParams, fib, lucas

CONSECUTIVE_FIB = "consecutive-fib"
CONSECUTIVE_LUCAS = "consecutive-lucas"
OTHER = "other"


def on_surface(k: int, x: int, y: int, z: int) -> bool:
    return z**3 - k**3 * y**3 - x**3 == 3 * k * x * y * z


def _root_z(k: int, x: int, y: int, bound: int) -> int | None:
    """Integer z in [ceil(sqrt(kxy)), bound] on the surface; the cubic is increasing there."""
    lo, _ = integer_nthroot(k * x * y, 2)
    lo = int(lo)
    if lo * lo < k * x * y:
        lo += 1
    lo = max(lo, 1)
    hi = bound
    const = k**3 * y**3 + x**3
    while lo <= hi:
        z = (lo + hi) // 2
        value = z**3 - 3 * k * x * y * z - const
        if value == 0:
            return z
        if value < 0:
            lo = z + 1
        else:
            hi = z - 1
    return None


def _triples(params: SeqParams, family: str, bound: int, first: int) -> set[tuple[int, int, int]]:
    term = fib if family == "fib" else lucas
    triples = set()
    n = first + 1
    while term(params, n - 1) <= bound:
        triples.add((term(params, n - 1), term(params, n), term(params, n + 1)))
        n += 1
    return triples


@dataclass(frozen=True)
class SurfacePoint:
    x: int
    y: int
    z: int
    kind: str
    coprime: bool


@dataclass(frozen=True)
class SurfaceReport:
    k: int
    bound: int
    points: tuple[SurfacePoint, ...]

    @property
    def suspicion_refuted(self) -> bool:
        """Some point is not a consecutive Fibonacci or Lucas triple."""
        return any(p.kind == OTHER for p in self.points)

    @property
    def coprime_points(self) -> tuple[SurfacePoint, ...]:
        return tuple(p for p in self.points if p.coprime)

    @property
    def other_coprime(self) -> tuple[SurfacePoint, ...]:
        return tuple(p for p in self.points if p.coprime and p.kind == OTHER)


def carlitz_surface_search(k: int, bound: int) -> SurfaceReport:
    """Every positive point with x, y, z <= bound, annotated by kind and coprimality."""
    if bound > config.SURFACE_MAX_BOUND:
        raise BoundExceededError(f"carlitz_surface_search: bound={bound} exceeds {config.SURFACE_MAX_BOUND}")
    params = SeqParams(k)
    fib_triples = _triples(params, "fib", bound, first=1)
    lucas_triples = _triples(params, "lucas", bound, first=0)
    points = []
    for x in range(1, bound + 1):
        for y in range(1, bound + 1):
            z = _root_z(k, x, y, bound)
            if z is None:
                continue
            if z != x + k * y or not on_surface(k, x, y, z):
                raise VerificationError(f"carlitz_surface_search: ({x}, {y}, {z}) breaks z = x + ky (k={k})")
            if (x, y, z) in fib_triples:
                kind = CONSECUTIVE_FIB
            elif (x, y, z) in lucas_triples:
                kind = CONSECUTIVE_LUCAS
            else:
                kind = OTHER
            points.append(SurfacePoint(x, y, z, kind, gcd(x, y, z) == 1))
    return SurfaceReport(k, bound, tuple(points))
