import os
import tempfile

# keep the design cache out of the user's home during tests
os.environ.setdefault("TURANLAB_CACHE", tempfile.mkdtemp(prefix="turanlab-test-cache-"))

import pytest

from turanlab import Hypergraph, build_steiner

FANO_BLOCKS = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))

_acceptance_lines = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fano():
    return Hypergraph(3, 7, FANO_BLOCKS)


@pytest.fixture(scope="session")
def t3():
    return Hypergraph(3, 5, ((0, 1, 2), (0, 1, 3), (2, 3, 4)))


@pytest.fixture(scope="session")
def k3():
    return Hypergraph(2, 3, ((0, 1), (0, 2), (1, 2)))


@pytest.fixture(scope="session")
def k4():
    return Hypergraph(2, 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


@pytest.fixture(scope="session")
def c5():
    return Hypergraph(2, 5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))


@pytest.fixture(scope="session")
def p3():
    return Hypergraph(2, 3, ((0, 1), (1, 2)))


@pytest.fixture(scope="session")
def s5():
    return build_steiner(11, 5).base


@pytest.fixture(scope="session")
def s6():
    return build_steiner(12, 6).base
