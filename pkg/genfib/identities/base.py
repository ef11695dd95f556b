"""Shared types for the identity registry: statements, instances and verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from genfib.sequences import SeqParams, fib, lucas

Value = Union[int, Fraction]
Bindings = Mapping[str, int]
SideFn = Callable[[SeqParams, Bindings], Value]

HOLDS = "holds"
FAILS_AS_PRINTED = "fails_as_printed"
HOLDS_WITH_CORRECTION = "holds_with_correction"


@dataclass(frozen=True)
class Statement:
    """One side-by-side form of an identity: text plus exact LHS/RHS evaluators."""

    text: str
    lhs: SideFn
    rhs: SideFn


@dataclass(frozen=True)
class Identity:
    """A registry entry.

    `printed` is the statement as published. `corrected` is the repaired form
    when the printed one is known to fail; `ansatz` marks entries whose repair
    is fitted at run time by the correction solver, starting from
    `solver_lhs` (the left-hand side the fit is made against).
    """

    id: str
    source: str
    symbols: tuple[str, ...]
    printed: Statement
    corrected: Optional[Statement] = None
    ranges: Mapping[str, tuple[int, int]] = field(default_factory=dict)
    k_range: Optional[tuple[int, int]] = None
    valid: Optional[Callable[[Bindings], bool]] = None
    ansatz: Optional[tuple] = None
    solver_lhs: Optional[SideFn] = None
    solver_text: str = ""

    @property
    def printed_expected_to_hold(self) -> bool:
        return self.corrected is None and self.ansatz is None


@dataclass(frozen=True)
class IdentityInstance:
    id: str
    k: int
    bindings: Mapping[str, int]

    def key(self) -> tuple:
        """Ordering key: k, then total index size, then values in symbol order."""
        values = tuple(self.bindings.values())
        return (self.k, sum(abs(v) for v in values), values)


@dataclass(frozen=True)
class Verdict:
    instance: IdentityInstance
    form: str
    lhs: Value
    rhs: Value

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    id: str
    status: str
    counterexample: Optional[Verdict]
    correction: Optional[str]
    printed: str
    checked: int
    unexpected: bool = False
    fitted: bool = False
    open: bool = False
    correction_counterexample: Optional[Verdict] = None


# Short evaluators used throughout the catalog.

def F(p: SeqParams, n: int) -> int:
    return fib(p, n)


def L(p: SeqParams, n: int) -> int:
    return lucas(p, n)


def sgn(e: int) -> int:
    """(-1)^e for any integer e."""
    return -1 if e % 2 else 1
