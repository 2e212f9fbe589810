import numpy as np
import pytest

from qcldpc.fixtures import EXAMPLES
from qcldpc.protograph import terminate
from qcldpc.qc_lift import lift


@pytest.fixture(scope="session")
def ex1_code():
    ex = EXAMPLES["ex1"]
    return lift(terminate(ex.spreading, 3).assembled, ex.shifts)


@pytest.fixture(scope="session")
def ex4_code():
    ex = EXAMPLES["ex4"]
    return lift(terminate(ex.spreading, 2).assembled, ex.shifts)


def random_cover_part(part, m, rng):
    """An m-cover of ``part``: each entry r becomes a sum of r random m x m permutation matrices."""
    part = np.asarray(part)
    out = np.zeros((part.shape[0] * m, part.shape[1] * m), dtype=np.int64)
    for x in range(part.shape[0]):
        for y in range(part.shape[1]):
            for _ in range(int(part[x, y])):
                out[x * m + np.arange(m), y * m + rng.permutation(m)] += 1
    return out


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
