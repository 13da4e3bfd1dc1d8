import pytest

from util import XYZ, problem


@pytest.fixture
def ex_origin_3var():
    return problem([((0, 0, 0), ["1", "y + z", "x"])], XYZ)


@pytest.fixture
def ex_origin_4cond():
    return problem([((0, 0), ["1", "x", "1/2*x^2 + y", "1/6*x^3 - 1/2*x^2 + x*y"])])


@pytest.fixture
def ex_lagrange():
    return problem([((0, 0), ["1"]), ((1, 2), ["1"]), ((2, 1), ["1"])])


@pytest.fixture
def ex_hermite():
    return problem([((0, 0), ["1", "x", "1/2*x^2 + y"]), ((1, 2), ["1", "x"])])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title}")
