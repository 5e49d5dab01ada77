import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qecc_bounds.codes import code_from_rows  # noqa: E402
from qecc_bounds.galois import field_make  # noqa: E402

HAMMING_7_4 = [
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1],
]


@pytest.fixture
def gf2():
    return field_make(2, 1)


@pytest.fixture
def hamming(gf2):
    return code_from_rows(gf2, HAMMING_7_4)


@pytest.fixture
def rng():
    return np.random.default_rng(20091121)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[num])
