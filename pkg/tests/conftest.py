import pytest

from skewbrace.catalog import small_group, small_group_catalog
from skewbrace.enumeration import corpus

ACCEPTANCE_ORDERS = list(range(1, 13)) + [15, 21, 30]


@pytest.fixture(scope="session")
def Z3():
    return small_group("Z3")


@pytest.fixture(scope="session")
def Z6():
    return small_group("Z6")


@pytest.fixture(scope="session")
def S3():
    return small_group("S3")


@pytest.fixture(scope="session")
def A4():
    return small_group("A4")


@pytest.fixture(scope="session")
def acceptance_corpus():
    """``(group, index, brace)`` for every catalog group of the acceptance orders."""
    return corpus(ACCEPTANCE_ORDERS)


@pytest.fixture(scope="session")
def small_corpus(acceptance_corpus):
    return [entry for entry in acceptance_corpus if entry[2].order <= 8]


def catalog_groups(max_order):
    return [G for n in range(1, max_order + 1) for G in small_group_catalog(n)]


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {line}")
