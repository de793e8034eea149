import math

import numpy as np
import pytest

from kerr_tavis import ModelConfig


@pytest.fixture(scope="session")
def small_cfg():
    return ModelConfig.create(0.5, 5)


@pytest.fixture(scope="session")
def fig1_cfg():
    return ModelConfig.create(0.9, 50)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_density(rng, symmetric=False):
    G = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = G @ G.conj().T
    if symmetric:
        swap = np.eye(4)[[0, 2, 1, 3]]
        rho = 0.5 * (rho + swap @ rho @ swap)
    return rho / np.trace(rho).real


SQRT_HALF = 1 / math.sqrt(2)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
