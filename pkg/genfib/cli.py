"""Command-line front end.

Usage:
    python3 -m genfib seq --k 2 --from -3 --to 6
    python3 -m genfib hankel --k 1 --alpha 1 --n 2 --show inverse
    python3 -m genfib pell classify --k 3 --n 33 --format json
    python3 -m genfib verify-all --write
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from genfib import config
from genfib.analytic import arctan_suite, catalan_divisibility, continued_fraction, reciprocal_sum
from genfib.binomials import FibBinomTable, fibonomial, luconomial, odd_luconomial_probe
from genfib.convolution import (
    convolution_bruteforce,
    convolution_closed,
    convolution_S,
    convolution_series,
    convolution_table,
)
from genfib.errata import errata_ledger
from genfib.errors import DomainError, GenFibError, VerificationError
from genfib.exact import arith, constants, field_element, power, sign, to_float
from genfib.hankel import (
    filbert_check,
    filbert_det_closed,
    filbert_matrix,
    lucas_det_printed,
    moment_hankel,
)
from genfib.identities.base import IdentityInstance
from genfib.identities.runner import (
    fitted_correction,
    get_identity,
    list_identities,
    report_entry,
    summarize,
    summary_line,
    sweep,
    verify,
)
from genfib.linalg import bareiss_det, exact_inverse
from genfib.orthopoly import (
    gram_report,
    kernel_inverse,
    lucas_hankel_report,
    monic_basis,
    norm_product_check,
    qjacobi_coeffs,
)
from genfib.pell import (
    brute_force_pm1,
    classify_general_fib,
    enumerate_pm1,
    solve_pm1,
    theorem_scan,
)
from genfib.report import Report, format_value, render, to_jsonable
from genfib.sequences import (
    SeqParams,
    closed_form,
    explicit_hyperbolic,
    fib_lucas_pair,
    hyperbolic_erratum_l2,
    matrix_power,
    seq,
    triple_agreement,
)
from genfib.surface import carlitz_surface_search

PELL_ACTIONS = ("classify", "solve", "enumerate", "brute", "surface", "scan")
_ECHO_SKIP = ("command", "format", "quiet", "timing", "write")


def _need(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            flag = {"start": "from", "stop": "to"}.get(name, name)
            raise DomainError(f"{args.command}: --{flag} is required")


def _or_default(value, default):
    """An explicit 0 is kept so the library can reject it."""
    return default if value is None else value


def _say(args: argparse.Namespace) -> Callable[[str], None]:
    if args.quiet:
        return lambda _msg: None
    return lambda msg: print(msg, file=sys.stderr)


def _params(args: argparse.Namespace) -> dict:
    return {
        key: value for key, value in vars(args).items()
        if key not in _ECHO_SKIP and value is not None and value is not False
    }


def _matrix_lines(M) -> list[list]:
    return [list(row) for row in M]


# --- seq ---

def _cmd_seq(args) -> Report:
    _need(args, "k")
    params = SeqParams(args.k)
    start = 0 if args.start is None else args.start
    stop = 10 if args.stop is None else args.stop
    if stop < start:
        raise DomainError(f"seq: --to ({stop}) is below --from ({start})")
    indices = range(start, stop + 1)
    check = triple_agreement if args.check else seq
    values = [check(params, args.family, n) for n in indices]
    payload = {"family": args.family, "k": args.k, "values": values}
    if args.check:
        payload["pairs"] = [fib_lucas_pair(params, n) for n in indices]
        payload["closed_form"] = [closed_form(params, args.family, n) for n in indices]
    if args.hyperbolic:
        payload["hyperbolic"] = [
            explicit_hyperbolic(params, args.family, n, mode=args.mode) for n in indices if n >= 0
        ]
        payload["l2_erratum"] = hyperbolic_erratum_l2(params)
    if args.n is not None:
        payload["matrix_power"] = matrix_power(params, args.n)
    return Report(
        command="seq",
        params=_params(args),
        payload=payload,
        headers=["n", args.family],
        rows=list(zip(indices, values)),
        lines=[" ".join(str(v) for v in values)],
        plain_table=False,
    )


# --- binom ---

def _cmd_binom(args) -> Report:
    _need(args, "k", "n")
    params = SeqParams(args.k)
    if args.probe:
        probe = odd_luconomial_probe(params, args.n)
        return Report(
            command="binom",
            params=_params(args),
            payload=probe,
            summary={"non_integer": sum(1 for r in probe if not r.is_integer)},
            headers=["n", "j", "value", "integer"],
            rows=[tuple(r) for r in probe],
        )
    if args.family == "lucas":
        values = [luconomial(params, args.n, j) for j in range(args.n + 1)]
        return Report(
            command="binom",
            params=_params(args),
            payload=values,
            headers=["j", "value", "integer"],
            rows=[(j, v.value, v.is_integer) for j, v in enumerate(values)],
        )
    if args.m is not None:
        value = fibonomial(params, args.n, args.m)
        return Report(command="binom", params=_params(args), payload={"value": value}, lines=[str(value)])
    table = FibBinomTable.build(params, args.n)
    return Report(
        command="binom",
        params=_params(args),
        payload=table,
        lines=[" ".join(str(v) for v in row) for row in table.rows],
    )


# --- hankel ---

def _cmd_hankel(args) -> Report:
    _need(args, "k", "n")
    alpha = _or_default(args.alpha, 1)
    show = args.show or "det"
    if show not in ("det", "inverse"):
        raise DomainError(f"hankel: --show must be det or inverse (got {show})")
    mh = moment_hankel(args.family, args.k, alpha, args.n)
    if args.family == "fib":
        check = filbert_check(args.k, alpha, args.n)
        det, inverse = check.det, check.inverse
        payload = {
            "moments": mh.moments,
            "det": det,
            "det_closed": filbert_det_closed(args.k, alpha, args.n, args.mode),
            "verbatim_factor": check.verbatim_factor,
            "inverse": inverse,
            "integral": check.integral,
        }
    else:
        M = filbert_matrix("lucas", args.k, alpha, args.n)
        det, inverse = bareiss_det(M), exact_inverse(M)
        printed = lucas_det_printed(args.k, alpha, args.n)
        payload = {
            "moments": mh.moments,
            "det": det,
            "det_printed": printed,
            "printed_holds": printed == det,
            "inverse": inverse,
        }
    if show == "det":
        return Report(command="hankel", params=_params(args), payload=payload, lines=[format_value(det)])
    return Report(command="hankel", params=_params(args), payload=payload, rows=_matrix_lines(inverse))


# --- orthopoly ---

def _cmd_orthopoly(args) -> Report:
    _need(args, "k", "n")
    alpha = _or_default(args.alpha, 1)
    show = args.show or "basis"
    mh = moment_hankel(args.family, args.k, alpha, args.n)
    if show == "basis":
        polys = [qjacobi_coeffs(args.family, args.k, alpha, j, mode=args.mode) for j in range(args.n + 1)]
        basis = monic_basis(mh)
        return Report(
            command="orthopoly",
            params=_params(args),
            payload={"qjacobi": polys, "monic": basis.polys, "norms": basis.norms},
            headers=["j", "h_j", "coefficients"],
            rows=[(j, h, " ".join(str(c) for c in poly)) for j, (h, poly) in enumerate(zip(basis.norms, polys))],
        )
    if show == "gram":
        report = gram_report(args.family, args.k, alpha, args.n)
        return Report(
            command="orthopoly",
            params=_params(args),
            payload=report,
            summary={"verbatim_orthogonal": report.verbatim_orthogonal},
            headers=["j", "zeta", "printed", "printed_holds"],
            rows=[(j, z, c, ok) for j, (z, c, ok) in enumerate(zip(report.zeta, report.printed, report.printed_holds))],
        )
    if show == "inverse":
        inverse = kernel_inverse(monic_basis(mh))
        if inverse != exact_inverse(mh.matrix):
            raise VerificationError("orthopoly: kernel inverse differs from the Gauss-Jordan inverse")
        return Report(command="orthopoly", params=_params(args), payload={"inverse": inverse}, rows=_matrix_lines(inverse))
    det = norm_product_check(mh)
    payload = {"det": det}
    rows = []
    if args.family == "lucas":
        report_rows = lucas_hankel_report(args.k, alpha, args.n)
        payload["lucas"] = report_rows
        rows = [(r.n, r.det, r.det_printed, r.printed_holds, r.has_non_integer) for r in report_rows]
    return Report(
        command="orthopoly",
        params=_params(args),
        payload=payload,
        headers=["n", "det", "printed", "printed_holds", "non_integer_inverse"] if rows else (),
        rows=rows,
        lines=[f"det: {det}"],
    )


# --- identity ---

def _bindings(args, symbols) -> dict | None:
    given = {s: getattr(args, s) for s in symbols}
    if all(v is None for v in given.values()):
        return None
    missing = [s for s, v in given.items() if v is None]
    if missing:
        raise DomainError(f"identity: missing bindings {missing}")
    return given


def _cmd_identity(args) -> Report:
    if args.list:
        ids = list_identities()
        return Report(command="identity", params=_params(args), payload=ids, lines=ids)
    if args.id is not None:
        identity = get_identity(args.id)
        bindings = _bindings(args, identity.symbols)
        if bindings is not None:
            instance = IdentityInstance(identity.id, _or_default(args.k, 1), bindings)
            verdicts = [verify(identity.id, instance, "printed")]
            if not identity.printed_expected_to_hold:
                verdicts.append(verify(identity.id, instance, "corrected"))
            return Report(
                command="identity",
                params=_params(args),
                payload=[{"form": v.form, "lhs": v.lhs, "rhs": v.rhs, "holds": v.holds} for v in verdicts],
                headers=["form", "lhs", "rhs", "holds"],
                rows=[(v.form, v.lhs, v.rhs, v.holds) for v in verdicts],
            )
        if args.fit:
            fit = fitted_correction(identity.id)
            text = fit.text if fit is not None else None
            return Report(
                command="identity",
                params=_params(args),
                payload={"id": identity.id, "fit": text, "open": fit is None},
                lines=[text or "no fit found (open)"],
            )
    k_range = (args.k, args.k) if args.k is not None else config.SWEEP_K_RANGE
    index_ranges = {}
    if args.start is not None or args.stop is not None:
        if args.id and "n" not in get_identity(args.id).symbols:
            raise DomainError(f"identity: --from/--to narrow the n range, and {args.id} has no n")
        lo = config.SWEEP_N_RANGE[0] if args.start is None else args.start
        hi = config.SWEEP_N_RANGE[1] if args.stop is None else args.stop
        index_ranges["n"] = (lo, hi)
    ids = [args.id] if args.id else None
    _say(args)("Sweeping identities...")
    reports = sweep(ids, k_range, index_ranges or None)
    counts = summarize(reports)
    return Report(
        command="identity",
        params=_params(args),
        payload=[report_entry(r) for r in reports],
        summary={**counts, "line": summary_line(counts)},
        headers=["id", "status", "checked"],
        rows=[(r.id, r.status, r.checked) for r in reports],
        unexpected=counts["unexpected"] > 0,
    )


# --- pell ---

def _pell_classify(args) -> Report:
    _need(args, "k", "n")
    result = classify_general_fib(args.k, args.n, experimental=args.experimental)
    payload = {
        "member": result.member,
        "index": result.index,
        "companion": result.companion,
        "trace": result.trace.pairs() if result.trace else [],
        "signs": [s for _, _, s in result.trace.steps] if result.trace else [],
        "discriminants": result.discriminants,
        "within_theorem": result.within_theorem,
    }
    lines = [f"member: {'true' if result.member else 'false'}"]
    if result.index is not None:
        lines.append(f"index: {result.index}  companion: {result.companion}")
    return Report(
        command="pell classify",
        params=_params(args),
        payload=payload,
        headers=["x", "y", "sign"],
        rows=list(result.trace.steps) if result.trace else [],
        lines=lines,
    )


def _pell_solve(args) -> Report:
    _need(args, "k", "x", "y")
    result = solve_pm1(args.k, args.x, args.y)
    if result is None:
        return Report(command="pell solve", params=_params(args), payload={"solution": None},
                      lines=["not on y^2 - kxy - x^2 = +-1"])
    payload = {
        "solution": result.solution,
        "trace": result.trace.pairs(),
        "swapped": result.trace.swapped,
        "within_theorem": result.within_theorem,
    }
    s = result.solution
    return Report(
        command="pell solve",
        params=_params(args),
        payload=payload,
        headers=["x", "y", "sign"],
        rows=list(result.trace.steps),
        lines=[f"(x, y) = (F_{s.n}, F_{s.n + 1}), sign {s.sign:+d}"],
    )


def _solution_report(args, command: str, headers: list[str], rows: list, payload) -> Report:
    return Report(
        command=command,
        params=_params(args),
        payload=payload,
        summary={"solutions": len(rows)},
        headers=headers,
        rows=rows,
        lines=[] if rows else [f"no solutions ≤ {args.bound}"],
    )


def _pell_enumerate(args) -> Report:
    _need(args, "k", "bound")
    solutions = enumerate_pm1(args.k, args.bound)
    rows = [(s.x, s.y, s.n, s.sign) for s in solutions]
    return _solution_report(args, "pell enumerate", ["x", "y", "n", "sign"], rows, solutions)


def _pell_brute(args) -> Report:
    _need(args, "k", "bound")
    found = brute_force_pm1(args.k, args.bound)
    return _solution_report(args, "pell brute", ["x", "y", "sign"], found, found)


def _pell_surface(args) -> Report:
    _need(args, "k")
    bound = 50 if args.bound is None else args.bound
    report = carlitz_surface_search(args.k, bound)
    return Report(
        command="pell surface",
        params=_params(args),
        payload=report,
        summary={
            "points": len(report.points),
            "suspicion_refuted": report.suspicion_refuted,
            "other_coprime": len(report.other_coprime),
        },
        headers=["x", "y", "z", "kind", "coprime"],
        rows=[(p.x, p.y, p.z, p.kind, p.coprime) for p in report.points],
    )


def _pell_scan(args) -> Report:
    _need(args, "k")
    bound = 10**4 if args.bound is None else args.bound
    scan = theorem_scan(args.k, bound)
    return Report(
        command="pell scan",
        params=_params(args),
        payload={"found": scan.found, "generated": scan.generated, "agrees": scan.agrees},
        summary={"agrees": scan.agrees},
        lines=[" ".join(str(n) for n in scan.found)],
    )


PELL_COMMANDS = {
    "classify": _pell_classify,
    "solve": _pell_solve,
    "enumerate": _pell_enumerate,
    "brute": _pell_brute,
    "surface": _pell_surface,
    "scan": _pell_scan,
}


def _cmd_pell(args) -> Report:
    return PELL_COMMANDS[args.action](args)


# --- convolve / cf / analytic / field ---

def _cmd_convolve(args) -> Report:
    if args.table:
        rows = convolution_table(
            _or_default(args.m, config.CONVOLUTION_M_MAX),
            _or_default(args.n, config.CONVOLUTION_N_MAX),
            _or_default(args.k, config.CONVOLUTION_K_MAX),
        )
        return Report(
            command="convolve",
            params=_params(args),
            payload=rows,
            summary={"rows": len(rows), "agree": True},
            headers=["k", "m", "n", "S"],
            rows=[(r.k, r.m, r.n, r.value) for r in rows],
        )
    _need(args, "k", "m", "n")
    payload = {
        "dp": convolution_S(args.m, args.n, args.k),
        "closed": convolution_closed(args.m, args.n, args.k),
        "series": convolution_series(args.m, args.n, args.k),
    }
    if args.n <= config.BRUTE_COMPOSITION_N_MAX:
        payload["bruteforce"] = convolution_bruteforce(args.m, args.n, args.k)
    values = set(payload.values())
    if len(values) != 1:
        raise VerificationError(f"convolve: evaluations disagree {payload}")
    return Report(command="convolve", params=_params(args), payload=payload, lines=[str(payload["dp"])])


def _cmd_cf(args) -> Report:
    _need(args, "k", "m", "t")
    cf = continued_fraction(args.k, args.m, args.t)
    return Report(
        command="cf",
        params=_params(args),
        payload={"quotients": cf.quotients, "sign": cf.sign, "value": cf.value, "depth": cf.depth,
                 "printed_count_holds": cf.printed_count_holds},
        summary={"depth": cf.depth, "printed_count_holds": cf.printed_count_holds},
        lines=[" ".join(str(q) for q in cf.quotients), f"value: {cf.value}"],
    )


def _cmd_analytic(args) -> Report:
    _need(args, "k")
    arctan = arctan_suite(
        args.k,
        m_max=_or_default(args.m, config.ARCTAN_EXACT_M_MAX),
        tail_terms=_or_default(args.t, config.ARCTAN_TAIL_TERMS),
    )
    sums = reciprocal_sum(args.k, config.RECIPROCAL_N_RANGE[1] if args.n is None else args.n)
    divisibility = catalan_divisibility(args.k)
    limit = sums.limit_decimal(args.digits)
    return Report(
        command="analytic",
        params=_params(args),
        payload={"arctan": arctan, "reciprocal": {"partials": sums.partials, "limit": sums.limit,
                                                  "limit_decimal": limit},
                 "catalan_divisibility": divisibility},
        summary={"arctan_holds": arctan.holds, "residual": f"{arctan.residual:.3e}",
                 "limit": limit, "divisibility_hits": divisibility.hits},
        headers=["n", "partial_sum"],
        rows=list(enumerate(sums.partials)),
    )


def _cmd_field(args) -> Report:
    _need(args, "k")
    n = 1 if args.n is None else args.n
    e_theta, q, D = constants(args.k)
    value = power(e_theta, n)
    params = SeqParams(args.k)
    # e^(n theta) = (L_n + F_n sqrt(D)) / 2
    halves = (field_element(seq(params, "lucas", n), D) + seq(params, "fib", n) * (e_theta * 2 - args.k)) / 2
    if halves != value:
        raise VerificationError(f"field: e^{n} theta disagrees with (L_n + F_n sqrt(D))/2 at k={args.k}")
    payload = {
        "D": D,
        "e_theta": e_theta,
        "q": q,
        "power": value,
        "conjugate": value.conjugate(),
        "norm": value.norm(),
        "trace": value.trace(),
        "times_q_power": arith(value, power(q, n), "mul"),
        "q_power_sign": sign(power(q, n)),
        "floor": value.floor(),
        "decimal": to_float(value, args.digits),
    }
    return Report(
        command="field",
        params=_params(args),
        payload=payload,
        headers=["quantity", "value"],
        rows=[(key, val) for key, val in payload.items()],
    )


# --- verify-all ---

def _cmd_verify_all(args) -> Report:
    say = _say(args)
    ledger = errata_ledger(progress=say)
    counts = ledger["summary"]
    if args.write:
        config.OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
        with open(config.ERRATA_PATH, "w") as f:
            json.dump(to_jsonable(ledger), f, indent=2, ensure_ascii=False)
        say(f"Wrote {config.ERRATA_PATH}")
    entries = ledger["identities"]
    failures = ledger["failures"]
    return Report(
        command="verify-all",
        params=_params(args),
        payload=ledger,
        summary={**counts, "failures": len(failures), "line": summary_line(counts)},
        headers=["id", "status", "checked"],
        rows=[(e["id"], e["status"], e["checked"]) for e in entries],
        unexpected=counts["unexpected"] > 0 or bool(failures),
    )


COMMANDS = {
    "seq": _cmd_seq,
    "binom": _cmd_binom,
    "hankel": _cmd_hankel,
    "orthopoly": _cmd_orthopoly,
    "identity": _cmd_identity,
    "pell": _cmd_pell,
    "convolve": _cmd_convolve,
    "cf": _cmd_cf,
    "analytic": _cmd_analytic,
    "field": _cmd_field,
    "verify-all": _cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, help="k = 2 sinh(theta), integer >= 1")
    common.add_argument("--family", choices=config.FAMILIES, default="fib")
    common.add_argument("--alpha", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--from", dest="start", type=int)
    common.add_argument("--to", dest="stop", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--bound", type=int)
    common.add_argument("--mode", choices=config.DET_MODES, default="corrected")
    common.add_argument("--format", choices=config.OUTPUT_FORMATS, default="plain")
    common.add_argument("--show", choices=config.SHOW_CHOICES)
    common.add_argument("--digits", type=int, default=config.DEFAULT_DIGITS)
    common.add_argument("--quiet", action="store_true", help="No progress on stderr")
    common.add_argument("--timing", action="store_true", help="Report elapsed_ms")

    parser = argparse.ArgumentParser(prog="genfib", description="Exact generalized Fibonacci/Lucas toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="F_n or L_n over an index range")
    p.add_argument("--check", action="store_true", help="Cross-check recurrence, doubling and closed form")
    p.add_argument("--hyperbolic", action="store_true", help="Binomial sums in sinh/cosh")

    p = sub.add_parser("binom", parents=[common], help="Fibonomial triangle or luconomials")
    p.add_argument("--probe", action="store_true", help="Odd-index Lucas quotient probe")

    sub.add_parser("hankel", parents=[common], help="Filbert/Hankel determinant and inverse")
    sub.add_parser("orthopoly", parents=[common], help="Orthogonal polynomials of the moment functional")

    p = sub.add_parser(
        "identity",
        parents=[common],
        help="Verify or sweep the identity registry",
        description="Sweeps cover the default grid; --k fixes k and --from/--to narrow only the n range.",
    )
    which = p.add_mutually_exclusive_group()
    which.add_argument("--id", help="Registry identifier")
    which.add_argument("--all", action="store_true", help="Sweep every identity")
    which.add_argument("--list", action="store_true", help="List registry identifiers")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--fit", action="store_true", help="Run the correction solver for --id")

    p = sub.add_parser("pell", parents=[common], help="Descent solvers and surface search")
    p.add_argument("action", choices=PELL_ACTIONS)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--experimental", action="store_true", help="Admit even k in classify")

    p = sub.add_parser("convolve", parents=[common], help="Convolution sums S_m(n)")
    p.add_argument("--table", action="store_true", help="Four-way agreement over the default grid")

    sub.add_parser("cf", parents=[common], help="Continued fraction of F_{m(t+1)}/F_{mt}")
    sub.add_parser("analytic", parents=[common], help="Arctan series, reciprocal sums, divisibility")
    sub.add_parser("field", parents=[common], help="Arithmetic in Q(sqrt(k^2+4))")

    p = sub.add_parser("verify-all", parents=[common], help="Errata ledger over the default grid")
    p.add_argument("--write", action="store_true", help=f"Also write {config.ERRATA_PATH.name} under output/")
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    # flags that only some subcommands define
    for name in ("i", "j", "id", "x", "y"):
        if not hasattr(args, name):
            setattr(args, name, None)
    for name in ("check", "hyperbolic", "probe", "all", "list", "fit", "experimental", "table", "write"):
        if not hasattr(args, name):
            setattr(args, name, False)
    return args


def run(args: argparse.Namespace) -> Report:
    started = time.perf_counter()
    report = COMMANDS[args.command](args)
    if args.timing:
        report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    return report


def dispatch(argv=None) -> Report:
    return run(parse_args(argv))


def main(argv=None) -> None:
    args = parse_args(argv)
    try:
        report = run(args)
    except VerificationError as e:
        print(f"Verification failed: {e}", file=sys.stderr)
        sys.exit(1)
    except GenFibError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(2)
    sys.stdout.write(render(report, args.format))
    sys.exit(1 if report.unexpected else 0)


if __name__ == "__main__":
    main()
