from pathlib import Path

import pytest

from mckay.groups import GroupSpec, build_cyclic, build_group

GOLDEN = Path(__file__).parent / "golden"


def cyclic(r, *weights):
    return build_cyclic(GroupSpec.cyclic(r, weights))


def table(name):
    return build_group(GroupSpec("table", path=f"{name}.tbl"))


@pytest.fixture(scope="session")
def z2():
    return cyclic(2, 1, 1)


@pytest.fixture(scope="session")
def z3():
    return cyclic(3, 1, 1, 1)


@pytest.fixture(scope="session")
def z7():
    return cyclic(7, 1, 2, 4)


@pytest.fixture(scope="session")
def icosahedral():
    return table("binary_icosahedral")


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def record(number, ok, text):
    ACCEPTANCE[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
