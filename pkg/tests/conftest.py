import math

import numpy as np
import pytest

from csgordon.params import CsgParams

ACCEPTANCE_LINES = []


def random_params(rng, R=(0.2, 1.2), phi=(0.05, 2 * math.pi - 0.05), k=(1.0, 2.0), c=(-0.5, 0.5)):
    return CsgParams.from_polar(rng.uniform(*R), rng.uniform(*phi), rng.uniform(*k), rng.uniform(*c))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
