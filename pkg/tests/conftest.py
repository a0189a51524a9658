import pytest

from skewlaurent import F4, QU, Frobenius, Shift, SkewContext


@pytest.fixture(scope="session")
def qu():
    return SkewContext(QU, Shift(1))


@pytest.fixture(scope="session")
def f4():
    return SkewContext(F4, Frobenius())


@pytest.fixture(scope="session")
def u(qu):
    return qu.gen()


@pytest.fixture(scope="session")
def w(f4):
    return f4.gen()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
