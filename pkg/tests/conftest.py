"""Shared pytest setup.

Slow tests run the full default grids; skip them with: python3 -m pytest -m "not slow"
"""


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs a full default grid (seconds, not milliseconds)")
