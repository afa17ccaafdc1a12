import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

from brokenset.graph import example_hypergraph, path_graph  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def hyper_h():
    return example_hypergraph()


@pytest.fixture
def path5():
    return path_graph(5)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
