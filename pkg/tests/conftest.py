import random

import pytest
from hypothesis import strategies as st

from fibperm.matrix import make_matrix

# values copied from the printed table of the first ten terms
FIB_TABLE = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
LUCAS_TABLE = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76]


def random_matrix(rng, n, lo=-5, hi=5, n_cols=None):
    n_cols = n if n_cols is None else n_cols
    return make_matrix([[rng.randint(lo, hi) for _ in range(n_cols)]
                        for _ in range(n)])


def random_lower_hessenberg(rng, n, lo=-5, hi=5):
    return make_matrix([[rng.randint(lo, hi) if j <= i + 1 else 0
                         for j in range(n)] for i in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240611)


def matrices(min_n=1, max_n=6, lo=-5, hi=5):
    """Hypothesis strategy for square integer matrices."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n),
            min_size=n, max_size=n).map(make_matrix))


def lower_hessenberg_matrices(min_n=1, max_n=9, lo=-5, hi=5):
    def band(rows):
        return make_matrix([[x if j <= i + 1 else 0 for j, x in enumerate(row)]
                            for i, row in enumerate(rows)])
    return matrices(min_n, max_n, lo, hi).map(lambda a: band(a.rows))


# -- acceptance summary: one PASS/FAIL line per criterion -------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "acceptance" not in report.keywords:
        return
    _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(
            "%s %s" % ("PASS" if outcome == "passed" else "FAIL", name))
