"""Exact arithmetic in the real quadratic field Q(sqrt(D)), D = k^2 + 4.

Rationals are plain ``fractions.Fraction`` values (already canonical:
reduced, positive denominator, zero is 0/1). A field element a + b*sqrt(D)
is a frozen ``QuadRat``; both parts are Fractions and D travels with the
value so elements from different k can never be mixed silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Union

from sympy import integer_nthroot

from genfib.errors import (
    DomainError,
    FieldZeroDivisionError,
    MismatchedFieldError,
    VerificationError,
)

Rat = Fraction
Scalar = Union[int, Fraction]


def _is_perfect_square(v: int) -> bool:
    if v < 0:
        return False
    _, exact = integer_nthroot(v, 2)
    return bool(exact)


@dataclass(frozen=True, eq=False)
class QuadRat:
    """Element a + b*sqrt(D) of Q(sqrt(D))."""

    a: Fraction
    b: Fraction
    D: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.D < 2 or _is_perfect_square(self.D):
            raise DomainError(f"QuadRat: D must be a positive non-square integer (D={self.D})")

    # --- Coercion ---

    def _coerce(self, other) -> QuadRat:
        if isinstance(other, QuadRat):
            if other.D != self.D:
                raise MismatchedFieldError(
                    f"QuadRat: cannot combine elements of Q(sqrt({self.D})) and Q(sqrt({other.D}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRat(Fraction(other), Fraction(0), self.D)
        return NotImplemented

    # --- Field structure ---

    def __add__(self, other) -> QuadRat:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadRat(self.a + other.a, self.b + other.b, self.D)

    __radd__ = __add__

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.a, -self.b, self.D)

    def __sub__(self, other) -> QuadRat:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadRat(self.a - other.a, self.b - other.b, self.D)

    def __rsub__(self, other) -> QuadRat:
        return (-self).__add__(other)

    def __mul__(self, other) -> QuadRat:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadRat(
            self.a * other.a + self.D * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.D,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadRat:
        n = self.norm()
        if n == 0:
            raise FieldZeroDivisionError(f"QuadRat: division by zero in Q(sqrt({self.D}))")
        return QuadRat(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other) -> QuadRat:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> QuadRat:
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadRat:
        return power(self, n)

    # --- Invariants ---

    def conjugate(self) -> QuadRat:
        return QuadRat(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self) -> Fraction:
        if self.b != 0:
            raise DomainError(f"QuadRat: {self} is irrational")
        return self.a

    def sign(self) -> int:
        return sign(self)

    def floor(self) -> int:
        """Exact floor of a + b*sqrt(D)."""
        # (A + B*sqrt(D)) / C with C > 0
        C = lcm(self.a.denominator, self.b.denominator)
        A = int(self.a * C)
        B = int(self.b * C)
        T = B * B * self.D
        r, exact = integer_nthroot(T, 2)
        r = int(r)
        if exact:
            return (A + r) // C if B >= 0 else (A - r) // C
        # sqrt(T) lies strictly between r and r + 1
        return (A + r) // C if B >= 0 else (A - r - 1) // C

    # --- Comparison ---

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadRat):
            return self.D == other.D and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __lt__(self, other) -> bool:
        return sign(self - other) < 0

    def __le__(self, other) -> bool:
        return sign(self - other) <= 0

    def __gt__(self, other) -> bool:
        return sign(self - other) > 0

    def __ge__(self, other) -> bool:
        return sign(self - other) >= 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.D})"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({self.D})"


def arith(x: QuadRat, y: QuadRat, op: str) -> QuadRat:
    """Dispatch add/sub/mul/div by name."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise DomainError(f"arith: unknown op '{op}' (expected add, sub, mul, div)")


def power(x: QuadRat, n: int) -> QuadRat:
    """Exact x**n by binary exponentiation; negative n goes through the inverse."""
    if n < 0:
        if x.is_zero():
            raise FieldZeroDivisionError("power: zero raised to a negative power")
        x = x.inverse()
        n = -n
    result = QuadRat(Fraction(1), Fraction(0), x.D)
    base = x
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def _sgn(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def sign(x: QuadRat) -> int:
    """Exact sign of a + b*sqrt(D) by rational case analysis on a and b."""
    sa, sb = _sgn(x.a), _sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with D*b^2
    diff = x.a * x.a - x.D * x.b * x.b
    return sa * _sgn(diff)


def field_element(value: Scalar, D: int) -> QuadRat:
    """Embed a rational into Q(sqrt(D))."""
    return QuadRat(Fraction(value), Fraction(0), D)


def constants(k: int) -> tuple[QuadRat, QuadRat, int]:
    """Return (e^theta, q, D) for k = 2 sinh(theta).

    e^theta = (k + sqrt(D))/2 with D = k^2 + 4, and q = -e^(-2 theta).
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"constants: k must be an integer >= 1 (k={k})")
    D = k * k + 4
    e_theta = QuadRat(Fraction(k, 2), Fraction(1, 2), D)
    if e_theta * e_theta != k * e_theta + 1:
        raise VerificationError(f"constants: e^theta fails x^2 = kx + 1 at k={k}")
    q = -power(e_theta, -2)
    return e_theta, q, D


def _decimal_exponent(x: QuadRat) -> int:
    """floor(log10(x)) for x > 0, by exact comparison."""
    f = x.floor()
    if f >= 1:
        return len(str(f)) - 1
    s = 1
    while (x * 10**s).floor() < 1:
        s += 1
    return -s


def to_float(x: QuadRat, digits: int) -> str:
    """Correctly rounded decimal string with `digits` significant digits.

    Rounds half up on the exact value; trailing zeros after the decimal point
    are dropped.
    """
    if digits < 1:
        raise DomainError(f"to_float: digits must be >= 1 (digits={digits})")
    s = sign(x)
    if s == 0:
        return "0"
    mag = -x if s < 0 else x
    e = _decimal_exponent(mag)
    shift = digits - 1 - e
    scaled = mag * Fraction(10) ** shift if shift >= 0 else mag / Fraction(10) ** (-shift)
    N = (scaled + Fraction(1, 2)).floor()
    if N == 10**digits:
        N //= 10
        e += 1
        shift -= 1
    if shift <= 0:
        text = str(N * 10 ** (-shift))
    else:
        body = str(N).rjust(shift + 1, "0")
        text = body[:-shift] + "." + body[-shift:]
        text = text.rstrip("0").rstrip(".")
    return ("-" if s < 0 else "") + text
