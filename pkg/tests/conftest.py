from fractions import Fraction

from hypothesis import strategies as st

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
nonzero_rationals = small_rationals.filter(bool)


def rational_lists(min_size=1, max_size=8):
    return st.lists(small_rationals, min_size=min_size, max_size=max_size)


# One line per acceptance criterion, shown in the terminal summary.
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
