"""Errata ledger: every printed statement next to its machine-checked verdict.

Usage: python3 -m genfib verify-all [--write]
"""

from __future__ import annotations

from typing import Callable, Optional

from genfib import config
from genfib.analytic import arctan_suite, continued_fraction, reciprocal_sum
from genfib.convolution import convolution_table
from genfib.errors import VerificationError
from genfib.hankel import filbert_check
from genfib.identities.runner import report_entry, summarize, sweep
from genfib.orthopoly import gram_report, lucas_hankel_report
from genfib.pell import enumerate_pm1, theorem_scan
from genfib.sequences import SeqParams, hyperbolic_erratum_l2, hyperbolic_verbatim_verdict
from genfib.surface import OTHER, carlitz_surface_search

CONGRUENCE_NOTE = (
    "The congruence pair after the Owings remark prints 'a^2 = -k^2 (mod b)' twice; "
    "the second congruence is checked with a and b swapped (owings-congruence)."
)

Progress = Optional[Callable[[str], None]]


def _span(bounds: tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


def filbert_errata() -> list[dict]:
    """Grid points where the printed Filbert determinant differs from the exact one."""
    entries = []
    for k in _span(config.HANKEL_K_RANGE):
        for alpha in _span(config.HANKEL_ALPHA_RANGE):
            for n in _span(config.HANKEL_N_RANGE):
                check = filbert_check(k, alpha, n)
                if check.verbatim_factor != 1:
                    entries.append({
                        "k": k,
                        "alpha": alpha,
                        "n": n,
                        "det": check.det,
                        "printed": check.det_verbatim,
                        "factor": check.verbatim_factor,
                    })
    return entries


def orthogonality_errata() -> list[dict]:
    entries = []
    for family in config.FAMILIES:
        for k in _span(config.HANKEL_K_RANGE):
            for alpha in _span(config.HANKEL_ALPHA_RANGE):
                report = gram_report(family, k, alpha, config.GRAM_N_MAX)
                fails_at = next((j for j, ok in enumerate(report.printed_holds) if not ok), None)
                entries.append({
                    "family": family,
                    "k": k,
                    "alpha": alpha,
                    "zeta": report.zeta,
                    "printed": report.printed,
                    "printed_fails_at": fails_at,
                    "verbatim_orthogonal": report.verbatim_orthogonal,
                })
    return entries


def lucas_hankel_errata(n_max: int = 3) -> list[dict]:
    entries = []
    for k in _span(config.HANKEL_K_RANGE):
        for row in lucas_hankel_report(k, 1, n_max):
            if row.printed_holds and not row.has_non_integer:
                continue
            entries.append({
                "k": k,
                "alpha": row.alpha,
                "n": row.n,
                "det": row.det,
                "printed": row.det_printed,
                "printed_holds": row.printed_holds,
                "non_integer_inverse": row.has_non_integer,
            })
    return entries


def hyperbolic_errata(n_max: int = 6) -> dict:
    l2 = [hyperbolic_erratum_l2(SeqParams(k)) for k in _span(config.HANKEL_K_RANGE)]
    sums = []
    for family in config.FAMILIES:
        for k in _span(config.HANKEL_K_RANGE):
            params = SeqParams(k)
            verdicts = [hyperbolic_verbatim_verdict(params, family, n) for n in range(n_max + 1)]
            failures = [v for v in verdicts if not v["holds"]]
            sums.append({"family": family, "k": k, "failures": len(failures),
                         "first": failures[0] if failures else None})
    return {"l2": l2, "sums": sums}


def continued_fraction_errata(limit: int = 4) -> list[dict]:
    entries = []
    for m in range(1, limit + 1):
        for t in range(1, limit + 1):
            cf = continued_fraction(1, m, t)
            entries.append({"m": m, "t": t, "depth": cf.depth, "printed_count_holds": cf.printed_count_holds})
    return entries


def surface_errata(k: int = 1, bound: int = 50) -> dict:
    report = carlitz_surface_search(k, bound)
    others = [p for p in report.points if p.kind == OTHER]
    return {
        "k": k,
        "bound": bound,
        "points": len(report.points),
        "suspicion_refuted": report.suspicion_refuted,
        "first_other": others[0] if others else None,
        "other_coprime": len(report.other_coprime),
        "other_non_coprime": len([p for p in others if not p.coprime]),
    }


def convolution_errata() -> dict:
    """Four-way agreement of S_m(n) over the default convolution grid."""
    rows = convolution_table()
    return {
        "rows": len(rows),
        "bruteforce_checked": sum(1 for r in rows if r.bruteforce is not None),
        "agree": True,
    }


def analytic_errata(n_max: int = config.RECIPROCAL_N_RANGE[1]) -> list[dict]:
    entries = []
    for k in _span(config.HANKEL_K_RANGE):
        arctan = arctan_suite(k)
        if not arctan.holds:
            raise VerificationError(f"arctan_suite: residual {arctan.residual:.3e} at k={k}")
        sums = reciprocal_sum(k, n_max)
        entries.append({
            "k": k,
            "arctan_residual": f"{arctan.residual:.3e}",
            "arctan_holds": arctan.holds,
            "reciprocal_n_max": n_max,
            "reciprocal_limit": sums.limit_decimal(),
        })
    return entries


def pell_errata(bound: int = config.PELL_ENUM_BOUND, scan_k: int = 3,
                scan_bound: int = config.CLASSIFY_SCAN_BOUND) -> dict:
    """Generated (F_n, F_{n+1}) pairs against brute force, then the membership scan."""
    # enumerate_pm1 raises VerificationError when the brute-force list differs
    enumerated = [
        {"k": k, "bound": bound, "solutions": len(enumerate_pm1(k, bound)), "agrees": True}
        for k in _span(config.HANKEL_K_RANGE)
    ]
    scan = theorem_scan(scan_k, scan_bound)
    if not scan.agrees:
        extra = sorted(set(scan.found) ^ set(scan.generated))
        raise VerificationError(f"theorem_scan: k={scan_k} bound={scan_bound} differs at {extra[:5]}")
    return {
        "enumerate_vs_brute": enumerated,
        "scan": {"k": scan_k, "bound": scan_bound, "members": len(scan.found), "agrees": scan.agrees},
    }


def _section(name: str, build: Callable[[], object], failures: list[str]) -> object:
    try:
        return build()
    except VerificationError as e:
        failures.append(f"{name}: {e}")
        return {"error": str(e)}


def errata_ledger(progress: Progress = None) -> dict:
    """Run the default acceptance grid and collect printed-vs-corrected verdicts.

    A section whose exact check fails is recorded under "failures" instead of
    aborting the run.
    """
    say = progress or (lambda _msg: None)
    failures: list[str] = []
    say("Sweeping identities...")
    reports = sweep()
    counts = summarize(reports)
    say(f"  {counts['corrected_pass']} corrected-pass, {counts['printed_fail']} printed-fail")
    say("Checking Filbert closed forms...")
    filbert = _section("filbert_determinant", filbert_errata, failures)
    say("Checking orthogonality constants...")
    orthogonality = _section("orthogonality", orthogonality_errata, failures)
    lucas_hankel = _section("lucas_hankel", lucas_hankel_errata, failures)
    say("Checking hyperbolic sums, continued fractions and the cubic surface...")
    hyperbolic = _section("hyperbolic", hyperbolic_errata, failures)
    cf = _section("continued_fraction", continued_fraction_errata, failures)
    surface = _section("surface", surface_errata, failures)
    say("Checking convolution sums...")
    convolution = _section("convolution", convolution_errata, failures)
    say("Checking arctan series and reciprocal sums...")
    analytic = _section("analytic", analytic_errata, failures)
    say("Checking Pell enumeration and the membership scan...")
    pell = _section("pell", pell_errata, failures)
    for failure in failures:
        say(f"  FAILED {failure}")
    return {
        "identities": [report_entry(r) for r in reports],
        "summary": counts,
        "filbert_determinant": filbert,
        "orthogonality": orthogonality,
        "lucas_hankel": lucas_hankel,
        "hyperbolic": hyperbolic,
        "continued_fraction": cf,
        "surface": surface,
        "convolution": convolution,
        "analytic": analytic,
        "pell": pell,
        "failures": failures,
        "notes": [CONGRUENCE_NOTE],
    }
