"""Tests for report rendering."""

import json
from dataclasses import dataclass
from fractions import Fraction

import pytest

from genfib.errors import DomainError
from genfib.exact import QuadRat
from genfib.report import Report, format_value, render, to_jsonable


def _make_report(**overrides):
    fields = {
        "command": "demo",
        "params": {"k": 1},
        "payload": {"det": Fraction(-1, 360)},
        "headers": ["n", "value"],
        "rows": [(0, Fraction(1)), (1, Fraction(1, 2))],
    }
    fields.update(overrides)
    return Report(**fields)


@dataclass(frozen=True)
class _Point:
    x: int
    y: Fraction


class TestFormatValue:
    def test_scalars(self):
        assert format_value(Fraction(-1, 360)) == "-1/360"
        assert format_value(Fraction(4)) == "4"
        assert format_value(True) == "true"
        assert format_value(None) == "-"

    def test_field_element(self):
        assert format_value(QuadRat(Fraction(1, 2), Fraction(1, 2), 5)) == "1/2 + 1/2*sqrt(5)"


class TestToJsonable:
    def test_nested(self):
        value = {"m": [[Fraction(1, 2), 3]], "e": QuadRat(0, 1, 5), "p": _Point(1, Fraction(2, 3))}
        assert to_jsonable(value) == {
            "m": [["1/2", 3]],
            "e": {"a": "0", "b": "1", "D": 5},
            "p": {"x": 1, "y": "2/3"},
        }

    def test_unknown_type(self):
        with pytest.raises(DomainError):
            to_jsonable(object())


class TestRender:
    def test_json_shape(self):
        data = json.loads(render(_make_report(), "json"))
        assert list(data) == ["command", "params", "payload", "summary", "elapsed_ms"]
        assert data["payload"]["det"] == "-1/360"
        assert data["elapsed_ms"] is None

    def test_plain_table(self):
        out = render(_make_report(summary={"rows": 2}), "plain")
        assert out.splitlines() == ["n  value", "0      1", "1    1/2", "rows: 2"]

    def test_csv(self):
        out = render(_make_report(), "csv")
        assert out.splitlines() == ["n,value", "0,1", "1,1/2"]

    def test_deterministic(self):
        assert render(_make_report(), "json") == render(_make_report(), "json")

    def test_unknown_format(self):
        with pytest.raises(DomainError):
            render(_make_report(), "xml")
