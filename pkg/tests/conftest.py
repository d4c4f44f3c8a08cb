import pytest

from zpfermat.cyclotomic import layer_polynomial
from zpfermat.numfield import NumberField

# Q_{1,3} in the presentation obtained from x^3 - 3x + 1 by x -> 2 - x
CUBIC = (-3, 9, -6, 1)
QUINTIC_EXAMPLE = (-451, -990, -605, -110, 0, 1)


@pytest.fixture(scope="session")
def cubic_field():
    return NumberField(CUBIC)


@pytest.fixture(scope="session")
def layer_fields():
    return {p: NumberField(tuple(layer_polynomial(p, 1))) for p in (3, 5, 7)}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
