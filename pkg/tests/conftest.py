import math

import pytest
from hypothesis import strategies as st

from tunnelkit.dyck import DyckPath


def catalan_binomial(n):
    # independent of the library's recurrence
    return math.comb(2 * n, n) // (n + 1)


@st.composite
def dyck_paths(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    ups = downs = 0
    out = []
    while len(out) < 2 * n:
        if ups == n:
            c = "d"
        elif ups == downs:
            c = "u"
        else:
            c = "u" if draw(st.booleans()) else "d"
        out.append(c)
        if c == "u":
            ups += 1
        else:
            downs += 1
    return DyckPath("".join(out))


@pytest.fixture
def figure_path():
    from tunnelkit.dyck import parse

    return parse("uuduudududddud")


# criterion number -> (description, passed), filled in by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        desc, ok = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {num:>2}. {desc}")
