"""
Check the fast rank laws and expectations against brute force.
"""

import numpy as np
import pytest

from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.expected_metrics import expected_ap_closed, expected_metric
from sampledeval.framework.metrics import AVERAGE_PRECISION, NDCG, RECALL, MetricSpec
from sampledeval.framework.oracle import (
    enumerate_with_replacement_pmf,
    enumerate_without_replacement_pmf,
    mc_estimate,
    oracle_expected_metric,
    sampled_metric_target,
)
from sampledeval.framework.rank_sampling import SamplingScheme, sampled_rank_pmf


def test_without_replacement_matches_enumeration():
    for n in range(2, 13):
        for r in range(1, n + 1):
            for m in range(1, min(6, n - 1) + 1):
                oracle = enumerate_without_replacement_pmf(r, n, m)
                pmf = sampled_rank_pmf(r, n, SamplingScheme(m, "without"))
                np.testing.assert_allclose(
                    pmf.probabilities, oracle.probabilities, rtol=0, atol=1e-12
                )


def test_with_replacement_matches_counting():
    for n in range(2, 13):
        for r in range(1, n + 1):
            for m in range(1, 7):
                oracle = enumerate_with_replacement_pmf(r, n, m)
                pmf = sampled_rank_pmf(r, n, SamplingScheme(m, "with"))
                np.testing.assert_allclose(
                    pmf.probabilities, oracle.probabilities, rtol=0, atol=1e-12
                )


def test_small_enumeration_example():
    pmf = enumerate_without_replacement_pmf(3, 5, 2)
    np.testing.assert_allclose(pmf.probabilities, [1 / 6, 4 / 6, 1 / 6], atol=1e-15)


def test_oracle_expectation_matches_engine():
    spec = MetricSpec(NDCG, 3)
    for r in (1, 4, 9, 12):
        oracle = enumerate_without_replacement_pmf(r, 12, 5)
        assert oracle_expected_metric(oracle, spec) == pytest.approx(
            expected_metric(r, 12, SamplingScheme(5, "without"), spec), abs=1e-12
        )


def test_enumeration_guards():
    with pytest.raises(ValidationError):
        enumerate_without_replacement_pmf(3, 40, 2)
    with pytest.raises(ValidationError):
        enumerate_without_replacement_pmf(3, 5, 5)
    with pytest.raises(ValidationError):
        enumerate_with_replacement_pmf(3, 5, 500)


def test_monte_carlo_agrees_with_closed_form():
    scheme = SamplingScheme(99)
    target = sampled_metric_target(100, 10000, scheme, MetricSpec(AVERAGE_PRECISION))
    mean, standard_error = mc_estimate(target, reps=20000, seed=1)
    assert abs(mean - expected_ap_closed(100, 10000, 99)) < 4 * standard_error


def test_monte_carlo_error_shrinks_with_reps():
    scheme = SamplingScheme(50, "without")
    target = sampled_metric_target(30, 2000, scheme, MetricSpec(RECALL, 2))
    _, small = mc_estimate(target, reps=10000, seed=4)
    _, large = mc_estimate(target, reps=20000, seed=4)
    assert large / small == pytest.approx(1 / np.sqrt(2), rel=0.2)
    mean, _ = mc_estimate(target, reps=10000, seed=4)
    again, _ = mc_estimate(target, reps=10000, seed=4)
    assert mean == again
    with pytest.raises(ValidationError):
        mc_estimate(target, reps=10, seed=4)
