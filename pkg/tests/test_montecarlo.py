import dataclasses

import numpy as np
import pytest

from dqpskber import McConfig, McResult, SnrPoint, exact_ber, simulate


def _config(**kwargs) -> McConfig:
    defaults = dict(snr=SnrPoint.from_db(3.0), num_symbols=10**5, seed=42)
    defaults.update(kwargs)
    return McConfig(**defaults)


class TestConfigValidation:
    def test_rejects_small_runs(self):
        with pytest.raises(ValueError):
            _config(num_symbols=999)

    def test_rejects_bad_confidence(self):
        for c in (0.0, 1.0, -0.5, 1.5):
            with pytest.raises(ValueError):
                _config(confidence=c)

    def test_rejects_negative_seed(self):
        with pytest.raises(ValueError):
            _config(seed=-1)

    def test_snr_domain_error_comes_from_snrpoint(self):
        with pytest.raises(ValueError):
            SnrPoint.from_linear(-2.0)


class TestDeterminism:
    def test_identical_configs_identical_results(self):
        r1 = simulate(_config())
        r2 = simulate(_config())
        assert r1 == r2

    def test_seed_changes_result(self):
        r1 = simulate(_config(seed=1))
        r2 = simulate(_config(seed=2))
        assert r1.bit_errors != r2.bit_errors

    def test_chunk_boundary_consistency(self):
        # runs longer than the internal chunk still deterministic
        big = _config(num_symbols=3 * 2**21 + 12345, seed=7)
        assert simulate(big) == simulate(big)


class TestResultInvariants:
    def test_counts(self):
        r = simulate(_config())
        assert isinstance(r, McResult)
        assert r.bits_sent == 2 * 10**5
        assert r.ber_estimate == r.bit_errors / r.bits_sent
        assert r.ci_half_width >= 0.0

    def test_result_is_frozen(self):
        r = simulate(_config())
        with pytest.raises(dataclasses.FrozenInstanceError):
            r.ber_estimate = 0.0


def test_noise_free_detection():
    r = simulate(McConfig(snr=SnrPoint.from_linear(1e6), num_symbols=10**4, seed=0))
    assert r.bit_errors == 0
    assert r.ber_estimate == 0.0


def test_statistical_containment_at_zero_db():
    snr = SnrPoint.from_db(0.0)
    exact = exact_ber(snr)
    r = simulate(McConfig(snr=snr, num_symbols=10**6, seed=11))
    assert abs(r.ber_estimate - exact) <= r.ci_half_width


def test_containment_rate_across_seeds():
    # 99% intervals: expect nearly all of 12 independent runs to contain
    snr = SnrPoint.from_db(3.0)
    exact = exact_ber(snr)
    hits = 0
    for seed in range(12):
        r = simulate(McConfig(snr=snr, num_symbols=10**6, seed=seed))
        hits += int(abs(r.ber_estimate - exact) <= r.ci_half_width)
    assert hits >= 10


def test_noise_scaling_monotonicity():
    # doubling the linear snr strictly decreases the mean estimate
    lo = SnrPoint.from_linear(1.5)
    hi = SnrPoint.from_linear(3.0)
    lo_mean = np.mean(
        [simulate(McConfig(snr=lo, num_symbols=10**6, seed=s)).ber_estimate for s in range(10)]
    )
    hi_mean = np.mean(
        [simulate(McConfig(snr=hi, num_symbols=10**6, seed=s)).ber_estimate for s in range(10)]
    )
    assert hi_mean < lo_mean


def test_wider_confidence_widens_interval():
    r95 = simulate(_config(confidence=0.95))
    r99 = simulate(_config(confidence=0.99))
    assert r99.ci_half_width > r95.ci_half_width
    assert r99.ber_estimate == r95.ber_estimate
