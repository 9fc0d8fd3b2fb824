import pytest

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "acceptance" not in report.keywords:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        _criteria[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        number = name.split("_")[2]
        terminalreporter.write_line(f"criterion {int(number):2d}: {_criteria[name]}  ({name})")


@pytest.fixture
def gf9():
    from qmds.field import make_field
    return make_field(3, 1)
