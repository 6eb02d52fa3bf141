"""
Ranking metrics computed from the predicted ranks of the relevant items.

All ranks are 1-based positions in an algorithm's ranking of the full catalog
of n items.  The general functions accept any number of relevant items; the
"simplified" forms assume exactly one relevant item at rank r.
"""

from dataclasses import dataclass
from numbers import Integral
from typing import Optional, Tuple

import numpy as np

from sampledeval.framework.exceptions import ValidationError

AUC = "auc"
PRECISION = "precision"
RECALL = "recall"
AVERAGE_PRECISION = "ap"
NDCG = "ndcg"
RECIPROCAL_RANK = "rr"
ACCURACY = "accuracy"

METRIC_KINDS = (
    AUC,
    PRECISION,
    RECALL,
    AVERAGE_PRECISION,
    NDCG,
    RECIPROCAL_RANK,
    ACCURACY,
)

# names accepted on the command line
METRIC_ALIASES = {
    "auc": AUC,
    "precision": PRECISION,
    "prec": PRECISION,
    "recall": RECALL,
    "hr": RECALL,
    "ap": AVERAGE_PRECISION,
    "map": AVERAGE_PRECISION,
    "ndcg": NDCG,
    "rr": RECIPROCAL_RANK,
    "mrr": RECIPROCAL_RANK,
    "accuracy": ACCURACY,
    "acc": ACCURACY,
}


def as_integer(value, name, minimum=None):
    """
    Check that value is a whole number (and not a bool), and optionally
    at least minimum.  Returns a python int.
    """
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise ValidationError("{} must be an integer, got {!r}".format(name, value))
    value = int(value)
    if minimum is not None and value < minimum:
        raise ValidationError(
            "{} must be at least {}, got {}".format(name, minimum, value)
        )
    return value


def check_rank(r, n):
    """
    Validate a single rank r within a catalog of n items.
    """
    n = as_integer(n, "catalog size n", minimum=2)
    r = as_integer(r, "rank r", minimum=1)
    if r > n:
        raise ValidationError("rank {} is outside the catalog of {} items".format(r, n))
    return r, n


@dataclass(frozen=True)
class MetricSpec:
    """
    Which metric to compute, and its cutoff k.  A missing cutoff means the
    metric is unbounded, i.e. k = n.
    """

    kind: str
    cutoff: Optional[int] = None

    def __post_init__(self):
        if self.kind not in METRIC_KINDS:
            raise ValidationError(
                "Unknown metric {!r}, choose from {}".format(
                    self.kind, ", ".join(METRIC_KINDS)
                )
            )
        if self.cutoff is not None:
            object.__setattr__(
                self, "cutoff", as_integer(self.cutoff, "cutoff k", minimum=1)
            )
        if self.kind == AUC:
            object.__setattr__(self, "cutoff", None)
        elif self.kind == ACCURACY:
            if self.cutoff not in (None, 1):
                raise ValidationError("Accuracy is only defined with cutoff 1")
            object.__setattr__(self, "cutoff", 1)

    @classmethod
    def parse(cls, text):
        """
        Build a spec from strings like "ap", "ndcg@10", "recall@10", "auc".
        """
        label = text.strip().lower()
        kind, _, cutoff = label.partition("@")
        if kind not in METRIC_ALIASES:
            raise ValidationError("Unknown metric {!r}".format(text))
        if not cutoff:
            return cls(METRIC_ALIASES[kind])
        try:
            k = int(cutoff)
        except ValueError:
            raise ValidationError("Bad cutoff in metric {!r}".format(text))
        return cls(METRIC_ALIASES[kind], k)

    @property
    def name(self):
        if self.cutoff is None or self.kind == ACCURACY:
            return self.kind
        return "{}@{}".format(self.kind, self.cutoff)

    def effective_cutoff(self, n):
        """
        Cutoffs beyond the catalog size behave like k = n.
        """
        if self.cutoff is None:
            return n
        return min(self.cutoff, n)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PredictedRanks:
    """
    Positions of the relevant items of one instance within a ranking of n items.
    Ranks are stored sorted ascending.
    """

    n: int
    ranks: Tuple[int, ...]

    def __post_init__(self):
        n = as_integer(self.n, "catalog size n", minimum=2)
        ranks = [as_integer(r, "rank", minimum=1) for r in self.ranks]
        if len(ranks) == 0:
            raise ValidationError("At least one relevant rank is needed")
        ranks.sort()
        for previous, current in zip(ranks, ranks[1:]):
            if previous == current:
                raise ValidationError("Duplicate rank {}".format(current))
        if ranks[-1] > n:
            raise ValidationError(
                "rank {} is outside the catalog of {} items".format(ranks[-1], n)
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ranks", tuple(ranks))

    @classmethod
    def single(cls, r, n):
        return cls(n, (r,))

    @property
    def size(self):
        return len(self.ranks)


def _discount(ranks):
    """
    NDCG positional reward 1 / log2(r + 1), as a ratio of natural logs.
    """
    return np.log(2.0) / np.log(np.asarray(ranks, dtype=float) + 1.0)


def exact_metric(predicted, spec):
    """
    Metric value for an arbitrary set of relevant ranks, over the full ranking.
    """
    n = predicted.n
    ranks = np.asarray(predicted.ranks, dtype=np.int64)
    size = len(ranks)
    if spec.kind == RECIPROCAL_RANK and size > 1:
        raise ValidationError("Reciprocal rank needs exactly one relevant item")

    if spec.kind == AUC:
        if size == n:
            raise ValidationError("AUC is undefined when every item is relevant")
        # closed form of the pairwise count
        return float((n - (size - 1) / 2.0 - ranks.sum() / size) / (n - size))

    k = spec.effective_cutoff(n)
    hits = ranks[ranks <= k]
    num_hits = len(hits)
    if spec.kind in (PRECISION, ACCURACY):
        return num_hits / k
    if spec.kind == RECALL:
        return num_hits / size
    if spec.kind in (AVERAGE_PRECISION, RECIPROCAL_RANK):
        # precision at the position of the j-th relevant item is j / r_j
        positions = np.arange(1, num_hits + 1)
        return float(np.sum(positions / hits) / min(size, k))
    # NDCG
    ideal = np.sum(_discount(np.arange(1, min(size, k) + 1)))
    return float(np.sum(_discount(hits)) / ideal)


def metric_curve(r_values, n, spec):
    """
    Simplified metric for a single relevant item, evaluated at every rank in
    r_values (array-like of ranks in [1, n]).
    """
    n = as_integer(n, "catalog size n", minimum=2)
    r = np.asarray(r_values, dtype=np.int64)
    if r.size and (r.min() < 1 or r.max() > n):
        raise ValidationError("ranks must lie in [1, {}]".format(n))
    if spec.kind == AUC:
        return (n - r) / (n - 1.0)
    k = spec.effective_cutoff(n)
    hit = r <= k
    if spec.kind in (PRECISION, ACCURACY):
        return np.where(hit, 1.0 / k, 0.0)
    if spec.kind == RECALL:
        return hit.astype(float)
    if spec.kind in (AVERAGE_PRECISION, RECIPROCAL_RANK):
        return np.where(hit, 1.0 / r, 0.0)
    return np.where(hit, _discount(r), 0.0)


def simplified_metric(r, n, spec):
    """
    Metric value when exactly one relevant item sits at rank r.
    """
    r, n = check_rank(r, n)
    return float(metric_curve([r], n, spec)[0])


def mean_metric(dataset, algorithm, spec):
    """
    Unweighted mean of the exact metric over all instances of an algorithm.
    """
    values = [
        exact_metric(predicted, spec)
        for _, predicted in dataset.instances(algorithm)
    ]
    return float(np.mean(values))
