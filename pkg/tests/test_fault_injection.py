"""Deliberately broken builds must be caught by the acceptance checks."""
import math

import numpy as np
import pytest

from kerr_tavis import amplitudes, spectrum, verification
from kerr_tavis.spectrum import BranchParams, Group, nonlinear_shift


def test_product_denominators_break_initial_identities(monkeypatch):
    def wrong(gamma, bp, eig):
        eta = eig.eta
        denom = np.array([eta[k] * eta[(k + 1) % 3] for k in range(3)])
        return 2.0 * gamma * bp.Gamma1 * bp.Gamma2 / denom

    assert verification.initial_identities().passed
    monkeypatch.setattr(amplitudes, "initial_weights", wrong)
    assert not verification.initial_identities().passed


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_missing_ground_n1_case_breaks_oracle_equivalence(monkeypatch):
    real = spectrum.branch_parameters

    def no_special_case(config, n, group):
        if group is Group.GROUND and n == 1:
            f = lambda k: nonlinear_shift(config.chi, k)  # noqa: E731
            return BranchParams(-config.delta + f(1), f(0), config.delta + f(-1),
                                math.sqrt(1), math.sqrt(0), group, n)
        return real(config, n, group)

    monkeypatch.setattr(amplitudes, "branch_parameters", no_special_case)
    res = verification.oracle_equivalence(n_times=10)
    assert not res.passed
