import numpy as np
import pytest
from scipy.spatial.transform import Rotation
from scipy.stats import unitary_group


@pytest.fixture
def rng():
    return np.random.default_rng(20000601)


def random_density(rng, dim=4, rank=None):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim=2):
    return unitary_group.rvs(dim, random_state=rng)


def random_rotation(rng):
    return Rotation.random(random_state=rng).as_matrix()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
