import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_log import RESULTS  # noqa: E402
from hypcone.polycore import poly_parse  # noqa: E402

QUARTIC = "(x1^2 + x2^2 - 2*x3^2)*(2*x1^2 - x2^2 - x3^2)"
QUARTIC_EXPANDED = "2*x1^4 + x1^2*x2^2 - 5*x1^2*x3^2 - x2^4 + x2^2*x3^2 + 2*x3^4"
LORENTZ = "x1^2 - x2^2 - x3^2"
CIRCLE = "x1^2 + x2^2 - x3^2"

@pytest.fixture(scope="session")
def quartic():
    return poly_parse(QUARTIC, 3)


@pytest.fixture(scope="session")
def lorentz():
    return poly_parse(LORENTZ, 3)


@pytest.fixture(scope="session")
def circle():
    return poly_parse(CIRCLE, 3)


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
