from fractions import Fraction

import mpmath
import pytest

from infolab.dist import validate_joint


def oracle_entropy(weights):
    """-sum p log2 p at 50 digits, straight from the definition."""
    with mpmath.workdps(50):
        total = mpmath.mpf(0)
        for w in weights:
            w = Fraction(w)
            if w:
                p = mpmath.mpf(w.numerator) / w.denominator
                total -= p * mpmath.log(p, 2)
        return float(total)


@pytest.fixture
def table1():
    return validate_joint([["0.2", "0.3"], ["0.1", "0.4"]])


@pytest.fixture
def diagonal():
    return validate_joint([["1/2", "0"], ["0", "1/2"]])


@pytest.fixture
def uniform22():
    return validate_joint([["1/4", "1/4"], ["1/4", "1/4"]])


@pytest.fixture
def point_mass():
    return validate_joint([["1"]])


_criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria.append((value, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
