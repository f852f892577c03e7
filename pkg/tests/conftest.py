import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from positroids.matroid import direct_sum, uniform, validate_bases  # noqa: E402


def load_fixture(name):
    return json.loads((HERE / "fixtures" / name).read_text())


def U(k, elements, n=4):
    return uniform(k, elements, n)


@pytest.fixture
def u24():
    return uniform(2, [1, 2, 3, 4])


@pytest.fixture
def parallel_sum():
    """U_{1,{1,2}} + U_{1,{3,4}}, the non-crossing sum."""
    return direct_sum(U(1, [1, 2]), U(1, [3, 4]))


@pytest.fixture
def crossing_sum():
    """U_{1,{1,3}} + U_{1,{2,4}}, the crossing sum."""
    return validate_bases(4, [[1, 2], [1, 4], [2, 3], [3, 4]])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
