from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from pentatile.golden import GoldenNumber
from pentatile.lattice import Coord5

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def coords(draw, elements=small_ints) -> Coord5:
    return Coord5(draw(st.lists(elements, min_size=5, max_size=5)))


@st.composite
def goldens(draw) -> GoldenNumber:
    return GoldenNumber(draw(rationals), draw(rationals))


def frac(p: int, q: int = 1) -> Fraction:
    return Fraction(p, q)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        status, title, failures = mod.RESULTS[n]
        line = f"{n:2d} {status} {title}"
        if failures:
            line += " :: " + "; ".join(failures)
        terminalreporter.write_line(line)
