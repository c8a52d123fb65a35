import pytest

from qfib.models import build_su2, build_su3
from qfib.pairs import podles_pair, su3_flag_pair


@pytest.fixture(scope="session")
def su2():
    return build_su2()


@pytest.fixture(scope="session")
def su3():
    return build_su3()


@pytest.fixture(scope="session")
def podles(su2):
    return podles_pair(su2)


@pytest.fixture(scope="session")
def flag3(su3):
    return su3_flag_pair(su3)


# one line per acceptance criterion, printed in the terminal summary
_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.name.startswith("test_criterion_") and (rep.when == "call" or rep.failed):
        num = int(item.name.split("_")[2])
        if _criteria.get(num) != "fail":
            _criteria[num] = "pass" if rep.passed else "fail"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        terminalreporter.write_line(f"criterion {num:2d}: {_criteria[num]}")
