import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from latprim.constructors import zn_ideal_lattice  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def z24():
    return zn_ideal_lattice(24)


@pytest.fixture(scope="session")
def z30():
    return zn_ideal_lattice(30)


@pytest.fixture(scope="session")
def z8():
    return zn_ideal_lattice(8)


@pytest.fixture
def data_path():
    return lambda name: os.path.join(DATA, name)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
