"""
Brute-force references for the rank distributions and expected metrics.
Slow by construction; used by the tests to check the fast paths.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np

from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.metrics import as_integer, check_rank, metric_curve
from sampledeval.framework.rank_sampling import RankPmf, draw_sampled_ranks, make_rng

# guards on the enumeration size
MAX_ENUMERATION_N = 15
MAX_RECURRENCE_M = 200


def _exact_pmf(counts, total):
    """
    Integer counts -> RankPmf, dividing once with exact rationals.
    """
    return RankPmf(np.array([float(Fraction(c, total)) for c in counts]))


def enumerate_without_replacement_pmf(r, n, m):
    """
    Sampled-rank PMF obtained by listing every m-subset of the n-1 irrelevant
    items and counting how many of them are ranked above r.
    """
    r, n = check_rank(r, n)
    m = as_integer(m, "sample size m", minimum=1)
    if n > MAX_ENUMERATION_N:
        raise ValidationError(
            "Enumeration limited to n <= {}, got {}".format(MAX_ENUMERATION_N, n)
        )
    if m > n - 1:
        raise ValidationError("Cannot draw m={} from {} items".format(m, n - 1))
    irrelevant = [item for item in range(1, n + 1) if item != r]
    counts = [0] * (m + 1)
    total = 0
    for subset in combinations(irrelevant, m):
        counts[sum(1 for item in subset if item < r)] += 1
        total += 1
    return _exact_pmf(counts, total)


def enumerate_with_replacement_pmf(r, n, m):
    """
    Sampled-rank PMF with replacement from exact integer counts: of the
    (n-1)^m ordered draws, counts[j] have j items ranked above r.
    """
    r, n = check_rank(r, n)
    m = as_integer(m, "sample size m", minimum=1)
    if m > MAX_RECURRENCE_M:
        raise ValidationError(
            "Recurrence limited to m <= {}, got {}".format(MAX_RECURRENCE_M, m)
        )
    above = r - 1
    below = n - r
    counts = [1]
    for _ in range(m):
        # Pascal-style step: each draw lands either above or below r
        counts = [
            (counts[j] if j < len(counts) else 0) * below
            + (counts[j - 1] if j > 0 else 0) * above
            for j in range(len(counts) + 1)
        ]
    return _exact_pmf(counts, (n - 1) ** m)


def oracle_expected_metric(pmf, spec):
    """
    Expected metric under an oracle PMF, among m+1 items.
    """
    values = metric_curve(pmf.support, pmf.m + 1, spec)
    return float(np.sum(pmf.probabilities * values))


def sampled_metric_target(r, n, scheme, spec):
    """
    Vectorised Monte Carlo target: the metric of freshly drawn sampled ranks.
    """

    def target(rng, size):
        ranks = draw_sampled_ranks(r, n, scheme, rng, size=size)
        return metric_curve(ranks, scheme.m + 1, spec)

    return target


def mc_estimate(target, reps, seed):
    """
    Seeded Monte Carlo estimate of E[target] with its standard error.
    target(rng, size) must return `size` independent realisations.
    """
    reps = as_integer(reps, "repetitions", minimum=100)
    rng = make_rng(seed)
    samples = np.asarray(target(rng, reps), dtype=float)
    return float(samples.mean()), float(samples.std(ddof=1) / np.sqrt(reps))
