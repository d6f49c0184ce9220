from __future__ import annotations

import os

import pytest

from qovar.catalog import build_catalog, open_catalog
from qovar.cli import default_cache


@pytest.fixture(scope="session")
def small_catalog():
    """Covariants up to degree 6, computed in memory."""
    saved = os.environ.pop("QOVAR_CACHE", None)
    try:
        return build_catalog(6)
    finally:
        if saved is not None:
            os.environ["QOVAR_CACHE"] = saved


@pytest.fixture(scope="session")
def full_catalog():
    """All 170 generators, lazily from the cache (built there on first use)."""
    return open_catalog(12, cache=default_cache(), jobs=os.cpu_count() or 1)


_ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
