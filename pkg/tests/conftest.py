import sys

import pytest

from strongcolor import erdos_nesetril_5, load_fixture, star_neighborhood


@pytest.fixture(scope="session")
def en_graph():
    return erdos_nesetril_5()


@pytest.fixture(scope="session")
def star_graph():
    return star_neighborhood()


@pytest.fixture(scope="session")
def petersen():
    return load_fixture("petersen")


@pytest.fixture(scope="session")
def robertson():
    return load_fixture("robertson")


@pytest.fixture(scope="session")
def cage46():
    return load_fixture("cage_4_6")


def pytest_terminal_summary(terminalreporter):
    """Print one line per acceptance criterion after the run."""
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    criteria = getattr(mod, "CRITERIA", {})
    results = getattr(mod, "RESULTS", {})
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(criteria):
        name, status, detail = results.get(k, (criteria[k], "FAIL", "did not complete"))
        terminalreporter.write_line(f"criterion {k} ({name}): {status}  [{detail}]")
