from __future__ import annotations

import sys
from dataclasses import replace

import pytest

from impactcalc.samples import sample_scenario


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance gate verdicts after the run."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None) if module else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def golden():
    return sample_scenario()


@pytest.fixture
def healthcare_only(golden):
    """Two-row scenario: the market-entry debit plus the healthcare credit."""
    items = tuple(i for i in golden.line_items if i.id in ("a", "e"))
    return replace(golden, line_items=items)


@pytest.fixture
def client(tmp_path):
    from fastapi.testclient import TestClient

    from impactcalc.service import create_app
    from impactcalc.store import ScenarioStore

    app = create_app(ScenarioStore(tmp_path / "store"))
    with TestClient(app) as c:
        yield c
