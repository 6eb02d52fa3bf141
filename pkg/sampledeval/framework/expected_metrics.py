"""
Expected value of a metric measured on the sampled rank, i.e. among the m+1
items made of the relevant item and m sampled irrelevant ones.

The general engine sums the metric over the rank PMF.  AUC, Recall@k and
average precision also have closed forms, and for m = 1 every metric becomes
a linear function of the true rank.
"""

import math

import numpy as np
from scipy.stats import binom

from sampledeval.framework.config import WITHOUT_REPLACEMENT
from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.metrics import (
    PredictedRanks,
    as_integer,
    check_rank,
    exact_metric,
    metric_curve,
    simplified_metric,
)
from sampledeval.framework.rank_sampling import (
    SamplingScheme,
    sampled_rank_pmf,
    success_probability,
)


def expected_metric(r, n, scheme, spec):
    """
    E[M_{m+1,k}(sampled rank)] for a relevant item at true rank r.
    The cutoff of spec applies within the m+1 sampled items.
    """
    pmf = sampled_rank_pmf(r, n, scheme)
    values = metric_curve(pmf.support, scheme.m + 1, spec)
    # fsum keeps the result independent of summation order
    return math.fsum(pmf.probabilities * values)


def expected_curve(r_values, n, scheme, specs):
    """
    Expected sampled metric for every rank in r_values and every spec.
    Returns a dict spec -> numpy array aligned with r_values.  The PMF is
    computed once per rank.
    """
    support = np.arange(1, scheme.m + 2)
    metric_values = {spec: metric_curve(support, scheme.m + 1, spec) for spec in specs}
    curves = {spec: np.empty(len(r_values)) for spec in specs}
    for i, r in enumerate(r_values):
        probs = sampled_rank_pmf(int(r), n, scheme).probabilities
        for spec in specs:
            curves[spec][i] = math.fsum(probs * metric_values[spec])
    return curves


def _check_closed_form_args(r, n, m):
    r, n = check_rank(r, n)
    m = as_integer(m, "sample size m", minimum=1)
    return r, n, m


def expected_auc_closed(r, n, m):
    """
    Sampled AUC is unbiased: its expectation is the exact AUC (n-r)/(n-1),
    whatever m.
    """
    r, n, m = _check_closed_form_args(r, n, m)
    return (n - r) / (n - 1)


def expected_recall_closed(r, n, m, k):
    """
    Expected sampled Recall@k with replacement: the Binomial CDF at k-1.
    """
    r, n, m = _check_closed_form_args(r, n, m)
    k = as_integer(k, "cutoff k", minimum=1)
    if k > m + 1:
        raise ValidationError("k={} is outside 1..{}".format(k, m + 1))
    if k == m + 1:
        return 1.0
    return float(binom.cdf(k - 1, m, success_probability(r, n)))


def expected_ap_closed(r, n, m):
    """
    Expected sampled average precision with replacement,
    (1 - (1-p)^(m+1)) / (p (m+1)) with p = (r-1)/(n-1), and exactly 1 at r = 1.
    """
    r, n, m = _check_closed_form_args(r, n, m)
    if r == 1:
        return 1.0
    p = success_probability(r, n)
    # 1 - (1-p)^(m+1) without cancellation for small p
    miss_all = -math.expm1((m + 1) * math.log1p(-p)) if p < 1.0 else 1.0
    return miss_all / (p * (m + 1))


def expected_ap_via_auc(r, n, m):
    """
    The same expectation written through the exact AUC,
    (1 - AUC_n(r)^(m+1)) / ((r-1) (m+1) / (n-1)).
    """
    r, n, m = _check_closed_form_args(r, n, m)
    if r == 1:
        return 1.0
    auc = expected_auc_closed(r, n, m)
    return (1.0 - auc ** (m + 1)) * (n - 1) / ((r - 1) * (m + 1))


def linear_coefficients_m1(spec, n):
    """
    With one sample, E[M] = slope * r + intercept, where M(1) and M(2) are
    the metric values among two items.
    """
    n = as_integer(n, "catalog size n", minimum=2)
    top = simplified_metric(1, 2, spec)
    second = simplified_metric(2, 2, spec)
    slope = (second - top) / (n - 1)
    intercept = (n * top - second) / (n - 1)
    return slope, intercept


def expected_mean_metric(dataset, algorithm, scheme, spec):
    """
    Mean over instances of the expected sampled metric.  Only defined for
    instances with a single relevant item.
    """
    values = []
    for instance_id, predicted in dataset.instances(algorithm):
        if predicted.size != 1:
            raise ValidationError(
                "Instance {} of {} has {} relevant items; expected metrics need "
                "exactly one (use simulate instead)".format(
                    instance_id, algorithm, predicted.size
                )
            )
        values.append(expected_metric(predicted.ranks[0], predicted.n, scheme, spec))
    return float(np.mean(values))


def full_sample_scheme(n):
    """
    Without replacement and m = n-1 the sample is the whole catalog, so the
    sampled metric equals the exact one.
    """
    return SamplingScheme(n - 1, WITHOUT_REPLACEMENT)


def sampling_gap(r, n, scheme, spec):
    """
    Expected sampled value minus the exact value of the metric at rank r.
    """
    return expected_metric(r, n, scheme, spec) - exact_metric(
        PredictedRanks.single(r, n), spec
    )
