from fractions import Fraction

from hypothesis import strategies as st

from degenpoly.exact import MultiPoly

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)

exponents = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 3))

polys = st.dictionaries(exponents, small_rationals, max_size=5).map(MultiPoly)


def F(*args):
    return Fraction(*args)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
