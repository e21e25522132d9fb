import pytest

from gbsample.poly import PolynomialRing

ACCEPTANCE_LINES = []


def record(criterion, passed, detail):
    """Store one acceptance line; printed in the terminal summary."""
    line = f"{'PASS' if passed else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


@pytest.fixture
def R3():
    return PolynomialRing(3, "grevlex", names=("x", "y", "z"))


@pytest.fixture
def cubic_ideal(R3):
    return [R3("x^2 - y"), R3("x^3 - z")]


@pytest.fixture
def twisted_cubic_matrix():
    return [[3, 2, 1, 0], [0, 1, 2, 3]]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
