"""Verify and sweep the identity registry.

Usage:
    from genfib.identities.runner import sweep, summarize
    reports = sweep()
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping, Optional, Sequence

from genfib import config
from genfib.errors import DomainError, InvalidBindingError, UnknownIdentityError
from genfib.identities.base import (
    FAILS_AS_PRINTED,
    HOLDS,
    HOLDS_WITH_CORRECTION,
    Identity,
    IdentityInstance,
    IdentityReport,
    Statement,
    Verdict,
)
from genfib.identities.catalog import IDENTITIES, REGISTRY
from genfib.identities.correction import CorrectionFit, correction_solve
from genfib.sequences import SeqParams

FORMS = ("printed", "corrected")


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity '{identity_id}'") from None


def list_identities() -> list[str]:
    return [identity.id for identity in IDENTITIES]


@lru_cache(maxsize=config.CACHE_SIZE)
def fitted_correction(identity_id: str) -> Optional[CorrectionFit]:
    """Run the correction solver once per solver-routed identity."""
    identity = get_identity(identity_id)
    if identity.ansatz is None or identity.solver_lhs is None:
        return None
    lhs = identity.solver_lhs
    return correction_solve(lambda p, n: lhs(p, {"n": n}), identity.ansatz)


def corrected_statement(identity: Identity) -> Optional[Statement]:
    """The form a sweep checks after the printed one.

    Identities expected to hold are their own correction; solver-routed ones
    use the fitted right-hand side, or None when no fit survived.
    """
    if identity.corrected is not None:
        return identity.corrected
    if identity.ansatz is None:
        return identity.printed
    fit = fitted_correction(identity.id)
    if fit is None:
        return None
    return Statement(
        text=f"{identity.solver_text} = {fit.text}",
        lhs=identity.solver_lhs,
        rhs=lambda p, b: fit.rhs(p, b["n"]),
    )


def _check_instance(identity: Identity, instance: IdentityInstance) -> None:
    keys = set(instance.bindings)
    if keys != set(identity.symbols):
        raise InvalidBindingError(
            f"{identity.id}: bindings {sorted(keys)} do not match symbols {list(identity.symbols)}"
        )
    if identity.k_range is not None and not identity.k_range[0] <= instance.k <= identity.k_range[1]:
        raise InvalidBindingError(
            f"{identity.id}: k={instance.k} outside {identity.k_range[0]}..{identity.k_range[1]}"
        )
    if identity.valid is not None and not identity.valid(instance.bindings):
        raise InvalidBindingError(f"{identity.id}: bindings {dict(instance.bindings)} violate the precondition")


def _evaluate(statement: Statement, instance: IdentityInstance, form: str) -> Verdict:
    params = SeqParams(instance.k)
    return Verdict(
        instance=instance,
        form=form,
        lhs=statement.lhs(params, instance.bindings),
        rhs=statement.rhs(params, instance.bindings),
    )


def verify(identity_id: str, instance: IdentityInstance, form: str = "printed") -> Verdict:
    """Evaluate both sides of one identity instance exactly."""
    identity = get_identity(identity_id)
    if form not in FORMS:
        raise DomainError(f"verify: unknown form '{form}' (expected printed or corrected)")
    _check_instance(identity, instance)
    statement = identity.printed if form == "printed" else corrected_statement(identity)
    if statement is None:
        raise DomainError(f"verify: {identity_id} has no correction (solver found no fit)")
    return _evaluate(statement, instance, form)


def instances(
    identity: Identity,
    k_range: tuple[int, int] = config.SWEEP_K_RANGE,
    index_ranges: Optional[Mapping[str, tuple[int, int]]] = None,
) -> Iterator[IdentityInstance]:
    """Valid instances ordered by k, then total index size, then values."""
    lo, hi = k_range
    if identity.k_range is not None:
        lo, hi = max(lo, identity.k_range[0]), min(hi, identity.k_range[1])
    overrides = index_ranges or {}
    spans = []
    for symbol in identity.symbols:
        r_lo, r_hi = overrides.get(symbol, identity.ranges.get(symbol, config.SWEEP_N_RANGE))
        spans.append(range(r_lo, r_hi + 1))
    combos = [
        dict(zip(identity.symbols, values)) for values in product(*spans)
    ]
    combos = [b for b in combos if identity.valid is None or identity.valid(b)]
    combos.sort(key=lambda b: (sum(abs(v) for v in b.values()), tuple(b.values())))
    for k in range(lo, hi + 1):
        for bindings in combos:
            yield IdentityInstance(identity.id, k, bindings)


def _first_failure(statement: Statement, cases: Sequence[IdentityInstance], form: str) -> Optional[Verdict]:
    for instance in cases:
        verdict = _evaluate(statement, instance, form)
        if not verdict.holds:
            return verdict
    return None


def check_identity(
    identity: Identity,
    k_range: tuple[int, int] = config.SWEEP_K_RANGE,
    index_ranges: Optional[Mapping[str, tuple[int, int]]] = None,
) -> IdentityReport:
    cases = list(instances(identity, k_range, index_ranges))
    printed_text = identity.printed.text
    failure = _first_failure(identity.printed, cases, "printed")
    if failure is None:
        return IdentityReport(identity.id, HOLDS, None, None, printed_text, len(cases))

    if identity.printed_expected_to_hold:
        return IdentityReport(identity.id, FAILS_AS_PRINTED, failure, None, printed_text, len(cases), unexpected=True)

    fitted = identity.corrected is None
    statement = corrected_statement(identity)
    if statement is None:
        return IdentityReport(
            identity.id, FAILS_AS_PRINTED, failure, None, printed_text, len(cases), fitted=True, open=True
        )
    correction_failure = _first_failure(statement, cases, "corrected")
    if correction_failure is not None:
        return IdentityReport(
            identity.id,
            FAILS_AS_PRINTED,
            failure,
            statement.text,
            printed_text,
            len(cases),
            unexpected=True,
            fitted=fitted,
            correction_counterexample=correction_failure,
        )
    return IdentityReport(
        identity.id, HOLDS_WITH_CORRECTION, failure, statement.text, printed_text, len(cases), fitted=fitted
    )


def sweep(
    ids: Optional[Sequence[str]] = None,
    k_range: tuple[int, int] = config.SWEEP_K_RANGE,
    index_ranges: Optional[Mapping[str, tuple[int, int]]] = None,
) -> list[IdentityReport]:
    """Exhaustive exact check, one report per identity in registry order."""
    selected = [get_identity(i) for i in ids] if ids else list(IDENTITIES)
    order = {identity.id: pos for pos, identity in enumerate(IDENTITIES)}
    selected.sort(key=lambda identity: order[identity.id])
    return [check_identity(identity, k_range, index_ranges) for identity in selected]


def summarize(reports: Sequence[IdentityReport]) -> dict[str, int]:
    return {
        "identities": len(reports),
        "corrected_pass": sum(1 for r in reports if r.status in (HOLDS, HOLDS_WITH_CORRECTION)),
        "printed_fail": sum(1 for r in reports if r.counterexample is not None and not r.unexpected),
        "unexpected": sum(1 for r in reports if r.unexpected),
        "open": sum(1 for r in reports if r.open),
    }


def summary_line(counts: Mapping[str, int]) -> str:
    return (
        f"identities: {counts['corrected_pass']} corrected-pass, "
        f"{counts['printed_fail']} printed-fail (documented), "
        f"{counts['unexpected']} unexpected"
    )


def report_entry(report: IdentityReport) -> dict:
    """JSON-ready form: {id, status, counterexample: {k, bindings, lhs, rhs}, correction, ...}."""

    def example(verdict: Optional[Verdict]) -> Optional[dict]:
        if verdict is None:
            return None
        return {
            "k": verdict.instance.k,
            "bindings": dict(verdict.instance.bindings),
            "lhs": verdict.lhs,
            "rhs": verdict.rhs,
        }

    entry = {
        "id": report.id,
        "status": report.status,
        "counterexample": example(report.counterexample),
        "correction": report.correction,
        "printed": report.printed,
        "checked": report.checked,
    }
    if report.fitted:
        entry["fitted"] = True
    if report.open:
        entry["open"] = True
    if report.unexpected:
        entry["unexpected"] = True
        entry["correction_counterexample"] = example(report.correction_counterexample)
    return entry
