import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfrb import fixtures as F  # noqa: E402

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def kC1():
    return F.algebra("kC1.alg.json")


@pytest.fixture(scope="session")
def kC2():
    return F.algebra("kC2.alg.json")


@pytest.fixture(scope="session")
def kC3():
    return F.algebra("kC3.alg.json")


@pytest.fixture(scope="session")
def kS3():
    return F.algebra("kS3.alg.json")


@pytest.fixture(scope="session")
def dC2():
    return F.algebra("kdualC2.alg.json")


@pytest.fixture(scope="session")
def dC3():
    return F.algebra("kdualC3.alg.json")


@pytest.fixture(scope="session")
def dS3():
    return F.algebra("kdualS3.alg.json")


@pytest.fixture(scope="session")
def ex_action():
    return F.action("c3-c2-right.action.json")


@pytest.fixture(scope="session")
def left_action():
    return F.action("c3-c2-left.action.json")


@pytest.fixture(scope="session")
def trivial_act():
    return F.action("c3-c2-trivial.action.json")


@pytest.fixture(scope="session")
def ex_coaction():
    return F.coaction("c3-c2-dual.coaction.json")


@pytest.fixture(scope="session")
def left_coaction():
    return F.coaction("c3-c2-dual-left.coaction.json")


@pytest.fixture(scope="session")
def trivial_coact():
    return F.coaction("c3-c2-trivial.coaction.json")


@pytest.fixture(scope="session")
def maps():
    """Operator of every shipped map file, keyed by file stem."""
    out = {}
    for name in F.list_fixtures():
        if name.endswith(".map.json"):
            out[name[: -len(".map.json")]] = F.linear_map(name)[0]
    return out


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        if name.startswith("test_criterion_"):
            _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        num, _, title = name[len("test_criterion_"):].partition("_")
        mark = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):2d} [{mark}] {title.replace('_', ' ')}")
