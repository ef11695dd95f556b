"""Tests for the cubic surface search."""

import pytest

from genfib.errors import BoundExceededError
from genfib.surface import (
    CONSECUTIVE_FIB,
    CONSECUTIVE_LUCAS,
    OTHER,
    carlitz_surface_search,
    on_surface,
)


def _by_xy(report):
    return {(p.x, p.y): p for p in report.points}


class TestSurfaceSearch:
    def test_classical_points(self):
        report = carlitz_surface_search(1, 50)
        points = _by_xy(report)
        assert len(report.points) == 1225
        assert points[(1, 1)].kind == CONSECUTIVE_FIB
        assert points[(1, 2)].kind == CONSECUTIVE_FIB
        assert points[(2, 1)].kind == CONSECUTIVE_LUCAS
        assert points[(2, 2)].kind == OTHER
        assert not points[(2, 2)].coprime

    def test_suspicion_refuted(self):
        report = carlitz_surface_search(1, 50)
        assert report.suspicion_refuted
        assert report.other_coprime
        assert all(p.z == p.x + p.y for p in report.points)

    def test_k2(self):
        points = _by_xy(carlitz_surface_search(2, 20))
        assert points[(1, 2)].z == 5
        assert points[(1, 2)].kind == CONSECUTIVE_FIB

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_matches_exhaustive_scan(self, k):
        """Solving for z agrees with trying every z up to the bound."""
        bound = 15
        scanned = {
            (x, y, z)
            for x in range(1, bound + 1)
            for y in range(1, bound + 1)
            for z in range(1, bound + 1)
            if on_surface(k, x, y, z)
        }
        found = {(p.x, p.y, p.z) for p in carlitz_surface_search(k, bound).points}
        assert found == scanned
        assert scanned

    def test_on_surface(self):
        assert on_surface(1, 2, 2, 4)
        assert not on_surface(1, 2, 2, 5)

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            carlitz_surface_search(1, 501)
