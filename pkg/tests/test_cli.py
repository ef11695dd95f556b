"""Tests for the genfib command line.

Run: python3 -m pytest tests/test_cli.py -v
"""

import inspect
import json
import re
import sys

import pytest

from genfib import cli, config


def _run(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    out, err = capsys.readouterr()
    return exc.value.code, out, err


def _run_json(capsys, *argv):
    code, out, _ = _run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def _fake_ledger(unexpected=0, failures=()):
    counts = {"identities": 1, "corrected_pass": 1 - unexpected, "printed_fail": 0,
              "unexpected": unexpected, "open": 0}
    return {
        "identities": [{"id": "catalan", "status": "holds", "counterexample": None,
                        "correction": None, "printed": "...", "checked": 10}],
        "summary": counts,
        "failures": list(failures),
        "notes": [],
    }


class TestSeq:
    def test_plain_row(self, capsys):
        code, out, _ = _run(capsys, "seq", "--k", "2", "--from", "-3", "--to", "6")
        assert code == 0
        assert out == "5 -2 1 0 1 2 5 12 29 70\n"

    def test_json_check(self, capsys):
        data = _run_json(capsys, "seq", "--k", "1", "--family", "lucas", "--to", "4", "--check")
        assert data["command"] == "seq"
        assert data["payload"]["values"] == [2, 1, 3, 4, 7]
        assert data["params"]["k"] == 1

    def test_bad_k(self, capsys):
        code, _, err = _run(capsys, "seq", "--k", "0")
        assert code == 2
        assert err.startswith("Error:")

    def test_missing_k(self, capsys):
        code, _, err = _run(capsys, "seq")
        assert code == 2
        assert "--k is required" in err

    def test_usage_error(self, capsys):
        code, _, _ = _run(capsys, "seq", "--k", "x")
        assert code == 2


class TestHankel:
    def test_det_plain(self, capsys):
        code, out, _ = _run(capsys, "hankel", "--k", "1", "--alpha", "1", "--n", "2")
        assert code == 0
        assert out == "-1/360\n"

    def test_inverse_json(self, capsys):
        data = _run_json(capsys, "hankel", "--k", "1", "--alpha", "1", "--n", "2", "--show", "inverse")
        assert data["payload"]["inverse"] == [[4, 12, -30], [12, 18, -60], [-30, -60, 180]]
        assert data["payload"]["det"] == "-1/360"
        assert data["payload"]["verbatim_factor"] == "6"

    def test_lucas(self, capsys):
        data = _run_json(capsys, "hankel", "--k", "1", "--n", "1", "--family", "lucas")
        assert data["payload"]["det"] == "5/36"
        assert data["payload"]["det_printed"] == "-1/12"
        assert data["payload"]["printed_holds"] is False


class TestOrthopoly:
    def test_gram(self, capsys):
        data = _run_json(capsys, "orthopoly", "--k", "1", "--alpha", "1", "--n", "2", "--show", "gram")
        assert data["payload"]["zeta"] == ["1", "-1/2", "1/5"]
        assert data["payload"]["printed_holds"] == [True, False, False]

    def test_det(self, capsys):
        code, out, _ = _run(capsys, "orthopoly", "--k", "1", "--n", "2", "--show", "det")
        assert code == 0
        assert out.splitlines()[0] == "det: -1/360"


class TestIdentity:
    def test_verify_instance(self, capsys):
        data = _run_json(capsys, "identity", "--id", "catalan", "--k", "2", "--n", "3", "--m", "2")
        (verdict,) = data["payload"]
        assert verdict["form"] == "printed"
        assert str(verdict["lhs"]) == "4"
        assert verdict["holds"] is True

    def test_verify_misprint(self, capsys):
        data = _run_json(capsys, "identity", "--id", "fib-gap-lucas", "--k", "2", "--n", "3")
        printed, corrected = data["payload"]
        assert printed["holds"] is False
        assert corrected["holds"] is True

    def test_list(self, capsys):
        code, out, _ = _run(capsys, "identity", "--list")
        assert code == 0
        assert len(out.splitlines()) == 35

    def test_unknown_id(self, capsys):
        code, _, err = _run(capsys, "identity", "--id", "nope", "--n", "1")
        assert code == 2
        assert "unknown identity 'nope'" in err

    def test_narrow_sweep(self, capsys):
        code, out, _ = _run(capsys, "identity", "--id", "sum-squares", "--k", "2", "--from", "1", "--to", "6",
                            "--quiet")
        assert code == 0
        assert out.splitlines()[-1] == "identities: 1 corrected-pass, 1 printed-fail (documented), 0 unexpected"


class TestPell:
    def test_classify_json(self, capsys):
        data = _run_json(capsys, "pell", "classify", "--k", "3", "--n", "33")
        payload = data["payload"]
        assert payload["member"] is True
        assert payload["index"] == 4
        assert payload["companion"] == 119
        assert payload["trace"] == [[33, 119], [10, 36], [3, 11], [1, 3]]

    def test_classify_even_k(self, capsys):
        code, _, err = _run(capsys, "pell", "classify", "--k", "2", "--n", "5")
        assert code == 2
        assert "experimental" in err

    def test_solve(self, capsys):
        code, out, _ = _run(capsys, "pell", "solve", "--k", "2", "--x", "5", "--y", "12")
        assert code == 0
        assert out.splitlines()[0] == "(x, y) = (F_3, F_4), sign -1"

    def test_brute_empty(self, capsys):
        code, out, _ = _run(capsys, "pell", "brute", "--k", "2", "--bound", "0")
        assert code == 0
        assert "no solutions ≤ 0" in out

    def test_enumerate_csv(self, capsys):
        code, out, _ = _run(capsys, "pell", "enumerate", "--k", "2", "--bound", "30", "--format", "csv")
        assert code == 0
        assert out.splitlines()[:3] == ["x,y,n,sign", "1,2,1,-1", "2,5,2,1"]


class TestOtherCommands:
    def test_convolve(self, capsys):
        code, out, _ = _run(capsys, "convolve", "--k", "1", "--m", "3", "--n", "5")
        assert code == 0
        assert out == "9\n"

    def test_cf(self, capsys):
        code, out, _ = _run(capsys, "cf", "--k", "1", "--m", "2", "--t", "2")
        assert code == 0
        assert out.splitlines()[:2] == ["3 3", "value: 8/3"]

    def test_field(self, capsys):
        data = _run_json(capsys, "field", "--k", "1", "--n", "2")
        payload = data["payload"]
        assert payload["D"] == 5
        assert payload["power"] == {"a": "3/2", "b": "1/2", "D": 5}
        assert payload["floor"] == 2
        assert payload["norm"] == "1"
        assert payload["decimal"] == "2.61803398875"

    def test_timing(self, capsys):
        data = _run_json(capsys, "cf", "--k", "1", "--m", "1", "--t", "1", "--timing")
        assert data["elapsed_ms"] is not None


class TestVerifyAll:
    def test_summary_line(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "errata_ledger", lambda progress=None: _fake_ledger())
        code, out, _ = _run(capsys, "verify-all", "--quiet")
        assert code == 0
        assert "identities: 1 corrected-pass, 0 printed-fail (documented), 0 unexpected" in out

    def test_unexpected_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "errata_ledger", lambda progress=None: _fake_ledger(unexpected=1))
        code, _, _ = _run(capsys, "verify-all", "--quiet")
        assert code == 1

    def test_write(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setattr(cli, "errata_ledger", lambda progress=None: _fake_ledger())
        monkeypatch.setattr(config, "OUTPUT_DIR", tmp_path / "output")
        monkeypatch.setattr(config, "ERRATA_PATH", tmp_path / "output" / "errata_ledger.json")
        code, _, err = _run(capsys, "verify-all", "--write")
        assert code == 0
        written = json.loads((tmp_path / "output" / "errata_ledger.json").read_text())
        assert written["summary"]["unexpected"] == 0
        assert "Wrote" in err

    def test_section_failure_exit_code(self, capsys, monkeypatch):
        """A failed ledger section fails the run even with no unexpected identity."""
        ledger = _fake_ledger(failures=["pell: theorem_scan: k=3 bound=1000000 differs at [4]"])
        monkeypatch.setattr(cli, "errata_ledger", lambda progress=None: ledger)
        code, out, _ = _run(capsys, "verify-all", "--quiet", "--format", "json")
        assert code == 1
        assert json.loads(out)["summary"]["failures"] == 1

    @pytest.mark.slow
    def test_full_ledger(self, capsys):
        """The real ledger over the default grids has no failures."""
        code, out, _ = _run(capsys, "verify-all", "--quiet", "--format", "json")
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["failures"] == []
        assert payload["summary"]["unexpected"] == 0
        assert payload["convolution"]["agree"] is True
        assert [row["k"] for row in payload["analytic"]] == [1, 2, 3, 4, 5]
        assert all(row["agrees"] for row in payload["pell"]["enumerate_vs_brute"])
        assert payload["pell"]["scan"] == {"k": 3, "bound": 10**6, "members": 12, "agrees": True}


ZERO_FLAG_CASES = [
    ("hankel", "--k", "1", "--alpha", "0", "--n", "1"),
    ("orthopoly", "--k", "1", "--alpha", "0", "--n", "1"),
    ("identity", "--id", "cassini", "--k", "0", "--n", "3"),
    ("analytic", "--k", "1", "--m", "0", "--n", "2"),
    ("analytic", "--k", "1", "--t", "0"),
    ("convolve", "--table", "--m", "0"),
    ("convolve", "--table", "--k", "0"),
    ("cf", "--k", "1", "--m", "0", "--t", "1"),
    ("cf", "--k", "1", "--m", "1", "--t", "0"),
]


class TestZeroFlags:
    @pytest.mark.parametrize("argv", ZERO_FLAG_CASES, ids=[" ".join(a) for a in ZERO_FLAG_CASES])
    def test_zero_is_a_domain_error(self, capsys, argv):
        """An explicit 0 is passed through and rejected, never replaced by the default."""
        code, out, err = _run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert err.startswith("Error:")

    def test_range_needs_n(self, capsys):
        code, _, err = _run(capsys, "identity", "--id", "arctan-step", "--from", "1", "--to", "5")
        assert code == 2
        assert "narrow the n range" in err


# Library operations every build must expose through some subcommand.
LIBRARY_OPERATIONS = [
    "arith", "power", "sign", "field_element", "constants", "to_float",
    "fib", "lucas", "seq", "pair_doubling", "fib_lucas_pair", "closed_form", "triple_agreement",
    "explicit_hyperbolic", "hyperbolic_verbatim_verdict", "hyperbolic_erratum_l2", "matrix_power",
    "fibonomial", "luconomial", "luconomial_value", "odd_luconomial_probe",
    "bareiss_det", "exact_inverse", "solve_consistent",
    "moments", "moment_hankel", "filbert_matrix", "filbert_inverse_closed", "filbert_det_closed",
    "lucas_det_printed", "filbert_check",
    "monic_basis", "kernel_inverse", "qjacobi_coeffs", "gram_report", "norm_product_check",
    "lucas_hankel_report",
    "verify", "instances", "check_identity", "sweep", "summarize", "report_entry",
    "correction_solve", "fitted_correction",
    "convolution_S", "convolution_bruteforce", "convolution_closed", "convolution_series",
    "convolution_table",
    "continued_fraction", "arctan_suite", "reciprocal_sum", "catalan_divisibility",
    "errata_ledger",
    "is_square", "classify_general_fib", "solve_pm1", "brute_force_pm1", "enumerate_pm1",
    "theorem_scan", "carlitz_surface_search", "on_surface",
]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _genfib_callees(obj) -> list:
    """genfib functions and classes named in obj's source, resolved in obj's module."""
    target = inspect.unwrap(obj)
    try:
        source = inspect.getsource(target)
    except (OSError, TypeError):
        return []
    namespace = vars(sys.modules[target.__module__])
    callees = []
    for name in set(_IDENTIFIER.findall(source)):
        value = namespace.get(name)
        if callable(value) and getattr(value, "__module__", "").startswith("genfib"):
            callees.append(value)
    return callees


def _reachable_names() -> set[str]:
    pending = list(cli.COMMANDS.values()) + list(cli.PELL_COMMANDS.values())
    reached = {}
    while pending:
        obj = pending.pop()
        if id(obj) in reached:
            continue
        reached[id(obj)] = obj
        pending.extend(_genfib_callees(obj))
    return {inspect.unwrap(obj).__name__ for obj in reached.values()}


class TestCommandCoverage:
    def test_every_operation_is_reachable(self):
        """Walking the subcommand table reaches every library operation."""
        reachable = _reachable_names()
        missing = [name for name in LIBRARY_OPERATIONS if name not in reachable]
        assert missing == []

    def test_subcommands(self):
        assert set(cli.COMMANDS) == {
            "seq", "binom", "hankel", "orthopoly", "identity", "pell",
            "convolve", "cf", "analytic", "field", "verify-all",
        }
        assert set(cli.PELL_COMMANDS) == set(cli.PELL_ACTIONS)


REPEAT_CASES = [
    ("seq", "--k", "3", "--from", "-5", "--to", "12", "--check", "--format", "json"),
    ("hankel", "--k", "2", "--alpha", "2", "--n", "3", "--show", "inverse", "--format", "csv"),
    ("orthopoly", "--k", "1", "--family", "lucas", "--n", "3", "--show", "gram"),
    ("identity", "--id", "product-diff-k-1", "--k", "2", "--from", "0", "--to", "8", "--quiet", "--format", "json"),
    ("pell", "classify", "--k", "3", "--n", "33", "--format", "json"),
    ("analytic", "--k", "2", "--n", "6", "--m", "20", "--format", "json"),
]


class TestDeterministicOutput:
    @pytest.mark.parametrize("argv", REPEAT_CASES, ids=[a[0] for a in REPEAT_CASES])
    def test_same_bytes_twice(self, capsys, argv):
        first = _run(capsys, *argv)
        second = _run(capsys, *argv)
        assert first[0] == 0
        assert first[1].encode() == second[1].encode()
