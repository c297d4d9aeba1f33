import dataclasses
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wirerace import REFERENCE_GEOMETRY, REFERENCE_STIFFNESS  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def geometry():
    return REFERENCE_GEOMETRY


@pytest.fixture
def frictionless():
    return dataclasses.replace(REFERENCE_GEOMETRY, friction_coefficient=0.0)


@pytest.fixture
def stiffness():
    return REFERENCE_STIFFNESS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
