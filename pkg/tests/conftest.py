from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from stoforge.config import DATA_DIR, PipelineConfig  # noqa: E402
from stoforge.interlink import EndpointConfig, FixtureEndpoint  # noqa: E402
from stoforge.pipeline import run_pipeline  # noqa: E402

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def bundled_result():
    """One offline pipeline run over the bundled snapshot, shared read-only."""
    return run_pipeline(PipelineConfig.bundled(), write=False)


@pytest.fixture(scope="session")
def fixture_graph():
    return FixtureEndpoint.from_directory(DATA_DIR / "dbpedia").graph


@pytest.fixture
def endpoint(fixture_graph):
    return FixtureEndpoint(fixture_graph)


@pytest.fixture
def live_config(tmp_path):
    """Endpoint config that records into an empty cache, without rate limiting."""
    return EndpointConfig(url="http://fixture.test/sparql", cache_dir=str(tmp_path / "cache"), min_interval=0)


# -- acceptance lines -------------------------------------------------------------

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion and return the verdict."""
    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        _ACCEPTANCE[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[number])
