import math

import numpy as np
import pytest

from kerr_tavis.states import (BinomialField, ModelConfig, binomial_coefficients,
                               choose_cutoff, validate_bell)


def test_binomial_two_photon_example():
    b = binomial_coefficients(0.5, 2, cutoff=6)
    np.testing.assert_allclose(b[:3], [0.5, math.sqrt(0.5), 0.5], atol=1e-15)
    assert np.all(b[3:] == 0.0)


def test_binomial_norm_and_mean():
    f = BinomialField.create(0.9, 50)
    assert abs(np.sum(f.coeffs**2) - 1) < 1e-12
    assert f.mean_photons == pytest.approx(45.0, abs=1e-9)


def test_binomial_vs_math_comb():
    b = binomial_coefficients(0.3, 12, cutoff=16)
    for n in range(13):
        ref = math.sqrt(math.comb(12, n) * 0.3**n * 0.7 ** (12 - n))
        assert b[n] == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("p", [0.0, 1.0, 1.2, -0.1])
def test_binomial_rejects_p(p):
    with pytest.raises(ValueError):
        binomial_coefficients(p, 5, cutoff=9)


def test_binomial_rejects_short_cutoff():
    with pytest.raises(ValueError, match="cutoff"):
        binomial_coefficients(0.9, 50, cutoff=20)


def test_choose_cutoff_examples():
    assert choose_cutoff(0.9, 50, 1e-12) == 54
    assert choose_cutoff(0.5, 1, 1e-12) == 5


def test_choose_cutoff_non_integer_against_direct_tail():
    # brute force: normalized Gamma-function weights on n = 0..ceil(M), tail from math.lgamma
    p, M, eps = 0.9, 100.5, 1e-10
    top = math.ceil(M)
    logw = [math.lgamma(M + 1) - math.lgamma(n + 1) - math.lgamma(M - n + 1)
            + n * math.log(p) + (M - n) * math.log(1 - p) for n in range(top + 1)]
    w = [math.exp(x) for x in logw]
    total = sum(w)
    n_max = next(k for k in range(top + 1) if sum(w[k + 1:]) / total < eps)
    assert choose_cutoff(p, M, eps) == n_max + 4


def test_non_integer_field_is_normalized():
    f = BinomialField.create(0.6, 7.5)
    assert abs(np.linalg.norm(f.coeffs) - 1) < 1e-12
    assert np.all(f.coeffs >= 0)


def test_bell_examples():
    s = validate_bell(1 / math.sqrt(2), 1j / math.sqrt(2))
    assert s.gamma1 == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert s.gamma4 == pytest.approx(1j / math.sqrt(2), abs=1e-15)
    assert validate_bell(1, 0).gamma1 == 1
    with pytest.raises(ValueError, match="normalized"):
        validate_bell(0.5, 0.5)


def test_bell_renormalizes_tiny_error():
    s = validate_bell(1 + 1e-11, 0)
    assert abs(s.gamma1) == 1.0


def test_config_rejects_negative_chi_and_small_cutoff():
    with pytest.raises(ValueError):
        ModelConfig.create(0.5, 5, chi=-1)
    with pytest.raises(ValueError):
        ModelConfig.create(0.5, 5, cutoff=8)


def test_config_hashable():
    a = ModelConfig.create(0.5, 5, chi=0.5)
    assert hash(a) == hash(ModelConfig.create(0.5, 5, chi=0.5))
