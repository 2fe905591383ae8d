import pytest

from reembed.census import census_embedded

_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_addoption(parser):
    parser.addoption("--allow-large", action="store_true", default=False,
                     help="also run census rows n=16..20 and other long checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "large: long-running check, enabled by --allow-large")
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criterion")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--allow-large"):
        return
    skip = pytest.mark.skip(reason="needs --allow-large")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        label = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[outcome]
        terminalreporter.write_line(f"{label}  {name}")


@pytest.fixture(scope="session")
def census_small():
    """Embedded census graphs with n <= 10 (9 graphs)."""
    return [item for n in (4, 6, 8, 10) for item in census_embedded(n)]


@pytest.fixture(scope="session")
def census_upto_14():
    return [item for n in range(4, 15, 2) for item in census_embedded(n)]
