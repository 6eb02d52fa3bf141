"""
Distribution of the rank of a relevant item after it is re-ranked among m
sampled irrelevant items.

A sampled irrelevant item outranks a relevant item at rank r with probability
(r - 1) / (n - 1).  Drawing m items with replacement gives a Binomial number
of items ranked above; drawing them without replacement gives a hypergeometric
one (population n - 1, of which r - 1 are ranked above).  The sampled rank is
that count plus one.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.stats import binom

from sampledeval.framework.config import (
    PMF_CACHE_MAX_M,
    PMF_CACHE_SIZE,
    PMF_SUM_TOLERANCE,
    SCHEMES,
    WITH_REPLACEMENT,
)
from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.metrics import as_integer, check_rank


@dataclass(frozen=True)
class SamplingScheme:
    """
    Number of sampled irrelevant items, and whether they are drawn with
    replacement ("with") or as distinct items ("without").
    """

    m: int
    replacement: str = WITH_REPLACEMENT

    def __post_init__(self):
        object.__setattr__(self, "m", as_integer(self.m, "sample size m", minimum=1))
        if self.replacement not in SCHEMES:
            raise ValidationError(
                "Unknown sampling scheme {!r}, choose from {}".format(
                    self.replacement, ", ".join(SCHEMES)
                )
            )

    @property
    def with_replacement(self):
        return self.replacement == WITH_REPLACEMENT

    def validate_for(self, n, num_relevant=1):
        """
        Without replacement we cannot draw more distinct irrelevant items
        than the n - |R| that exist.
        """
        num_irrelevant = n - num_relevant
        if num_irrelevant < 1:
            raise ValidationError(
                "No irrelevant items to sample from (n={}, |R|={})".format(
                    n, num_relevant
                )
            )
        if not self.with_replacement and self.m > num_irrelevant:
            raise ValidationError(
                "Cannot draw m={} distinct items from {} irrelevant items".format(
                    self.m, num_irrelevant
                )
            )
        return True

    def __str__(self):
        return "m={} ({} replacement)".format(self.m, self.replacement)


@dataclass(frozen=True, eq=False)
class RankPmf:
    """
    Probability of each sampled rank 1 .. m+1.
    """

    probabilities: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probabilities, dtype=float)
        if probs.ndim != 1 or len(probs) < 1:
            raise ValidationError("A rank PMF needs a 1-d array of probabilities")
        if np.any(probs < 0.0) or np.any(probs > 1.0):
            raise ValidationError("Probabilities must lie in [0, 1]")
        if abs(probs.sum() - 1.0) > PMF_SUM_TOLERANCE:
            raise ValidationError(
                "Probabilities sum to {!r}, not 1".format(float(probs.sum()))
            )
        object.__setattr__(self, "probabilities", probs)

    @property
    def m(self):
        return len(self.probabilities) - 1

    @property
    def support(self):
        return np.arange(1, len(self.probabilities) + 1)

    def mean(self):
        return float(np.dot(self.support, self.probabilities))

    def cdf(self, k):
        """
        P(sampled rank <= k), for 0 <= k <= m+1.
        """
        k = as_integer(k, "k", minimum=0)
        if k > self.m + 1:
            raise ValidationError(
                "k={} is outside the support 1..{}".format(k, self.m + 1)
            )
        if k == 0:
            return 0.0
        if k == self.m + 1:
            return 1.0
        return min(1.0, float(np.sum(self.probabilities[:k])))


def success_probability(r, n):
    """
    Probability that one uniformly sampled irrelevant item is ranked above
    a relevant item at rank r.
    """
    r, n = check_rank(r, n)
    return (r - 1) / (n - 1)


def hypergeometric_pmf(population, successes, draws):
    """
    P(k successes), k = 0..draws, when drawing without replacement from a
    population holding `successes` successes.

    Built from the ratio P(k+1) / P(k) = (K-k)(m-k) / ((k+1)(N-K-m+k+1)),
    multiplied outwards from the mode (where the PMF is largest) and then
    renormalised.  Away from the mode the products only shrink, so nothing
    overflows and each probability carries a few ulps of relative error.
    """
    N, K, m = population, successes, draws
    probs = np.zeros(m + 1)
    low = max(0, m - (N - K))
    high = min(K, m)
    if low == high:
        probs[low] = 1.0
        return probs
    k = np.arange(low, high, dtype=float)
    ratio = (K - k) * (m - k) / ((k + 1.0) * (N - K - m + k + 1.0))
    mode = min(max((m + 1) * (K + 1) // (N + 2), low), high)
    probs[mode] = 1.0
    probs[mode + 1 : high + 1] = np.cumprod(ratio[mode - low :])
    probs[low:mode] = np.cumprod(1.0 / ratio[: mode - low][::-1])[::-1]
    return probs / probs.sum()


def _rank_pmf_array(r, n, m, replacement):
    if replacement == WITH_REPLACEMENT:
        log_pmf = binom.logpmf(np.arange(m + 1), m, (r - 1) / (n - 1))
        # renormalise in log space so extreme p or large m cannot underflow
        probs = np.exp(log_pmf - np.max(log_pmf))
        probs /= probs.sum()
    else:
        probs = hypergeometric_pmf(n - 1, r - 1, m)
    probs.setflags(write=False)
    return probs


_cached_rank_pmf_array = lru_cache(maxsize=PMF_CACHE_SIZE)(_rank_pmf_array)


def sampled_rank_pmf(r, n, scheme):
    """
    Law of the sampled rank of a single relevant item at true rank r.
    """
    r, n = check_rank(r, n)
    scheme.validate_for(n, 1)
    if scheme.m <= PMF_CACHE_MAX_M:
        probs = _cached_rank_pmf_array(r, n, scheme.m, scheme.replacement)
    else:
        probs = _rank_pmf_array(r, n, scheme.m, scheme.replacement)
    return RankPmf(probs)


def sampled_rank_cdf(r, n, scheme, k):
    """
    P(sampled rank <= k).
    """
    return sampled_rank_pmf(r, n, scheme).cdf(k)


def sampled_rank_mean(r, n, scheme):
    """
    Mean sampled rank, 1 + m (r-1)/(n-1), the same for both schemes.
    """
    return 1.0 + scheme.m * success_probability(r, n)


def make_rng(seed, stream=None):
    """
    Generator for a master seed, or for substream `stream` of it.  Substreams
    of the same seed are statistically independent, so repetitions can be
    spread over processes or machines and still give the same numbers.
    """
    seed = as_integer(seed, "seed", minimum=0)
    if stream is None:
        return np.random.default_rng(np.random.SeedSequence([seed]))
    stream = as_integer(stream, "stream", minimum=0)
    return np.random.default_rng(np.random.SeedSequence([seed, stream]))


def draw_sampled_ranks(r, n, scheme, rng, size=None):
    """
    Realisations of the sampled rank, drawn directly from the Binomial or
    hypergeometric law.
    """
    r, n = check_rank(r, n)
    scheme.validate_for(n, 1)
    if r == 1:
        return np.ones(size, dtype=np.int64) if size is not None else 1
    if scheme.with_replacement:
        num_above = rng.binomial(scheme.m, (r - 1) / (n - 1), size=size)
    else:
        num_above = rng.hypergeometric(r - 1, n - r, scheme.m, size=size)
    return num_above + 1


def draw_sampled_rank(r, n, scheme, rng):
    return int(draw_sampled_ranks(r, n, scheme, rng))


def monte_carlo_ranks(predicted, scheme, rng):
    """
    Sample m irrelevant items and return the positions of all relevant items
    of `predicted` within the union of relevant and sampled items.
    """
    n = predicted.n
    size = predicted.size
    scheme.validate_for(n, size)
    num_irrelevant = n - size
    # irrelevant items are indexed 0..num_irrelevant-1 in ranking order;
    # the j-th relevant item has ranks[j] - j irrelevant items above it
    order = np.arange(1, size + 1)
    above = np.asarray(predicted.ranks) - order
    if scheme.with_replacement:
        sample = rng.integers(0, num_irrelevant, size=scheme.m)
    else:
        sample = rng.choice(num_irrelevant, size=scheme.m, replace=False)
    sample.sort()
    positions = order + np.searchsorted(sample, above, side="left")
    return tuple(int(p) for p in positions)
