"""
Does sampled evaluation keep the ordering of algorithms that exact evaluation
gives?  A metric is consistent under sampling if, for every pair of algorithms,
the order of the exact means equals the order of the expected sampled means.
"""

from collections import namedtuple
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Tuple

import pandas as pd

from sampledeval.framework.config import TIE_TOLERANCE
from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.expected_metrics import expected_mean_metric
from sampledeval.framework.metrics import MetricSpec, mean_metric
from sampledeval.framework.rank_sampling import SamplingScheme

Inversion = namedtuple("Inversion", ["pair", "exact_order", "sampled_order"])

Crossover = namedtuple(
    "Crossover", ["pair", "m_low", "m_high", "order_before", "order_after"]
)


def compare(a, b, tolerance=TIE_TOLERANCE):
    """
    Order symbol of a relative to b: ">", "<" or "=" for near ties.
    """
    delta = a - b
    if delta > tolerance:
        return ">"
    if delta < -tolerance:
        return "<"
    return "="


@dataclass(frozen=True)
class ComparisonReport:
    spec: MetricSpec
    scheme: SamplingScheme
    exact_means: Dict[str, float]
    expected_means: Dict[str, float]
    consistent: Dict[Tuple[str, str], bool]
    inversions: List[Inversion]

    @property
    def is_consistent(self):
        return all(self.consistent.values())

    def to_frame(self):
        """
        One row per algorithm with its exact and expected sampled mean.
        """
        return pd.DataFrame(
            {
                "algorithm": list(self.exact_means.keys()),
                "exact": list(self.exact_means.values()),
                "expected": [self.expected_means[a] for a in self.exact_means],
            }
        )

    def render(self):
        """
        Human readable table plus the list of order inversions.
        """
        lines = [
            "metric: {}  sampling: {}".format(self.spec.name, self.scheme),
            self.to_frame().to_string(index=False, float_format="{:.6f}".format),
        ]
        if self.is_consistent:
            lines.append("consistent: every pair keeps its order")
        else:
            lines.append("inconsistent:")
            for inversion in self.inversions:
                lines.append(
                    "  {} vs {}: exact {}  sampled {}".format(
                        inversion.pair[0],
                        inversion.pair[1],
                        inversion.exact_order,
                        inversion.sampled_order,
                    )
                )
        return "\n".join(lines)


def check_consistency(dataset, spec, scheme):
    """
    Compare the exact ordering of all algorithm pairs with the ordering of
    their expected sampled means.  Pairs are ordered, so an inversion of
    (A, B) is also reported as one of (B, A).
    """
    exact_means = {}
    expected_means = {}
    for algorithm in dataset.algorithms:
        exact_means[algorithm] = mean_metric(dataset, algorithm, spec)
        expected_means[algorithm] = expected_mean_metric(
            dataset, algorithm, scheme, spec
        )
    consistent = {}
    inversions = []
    for first, second in permutations(dataset.algorithms, 2):
        exact_order = compare(exact_means[first], exact_means[second])
        sampled_order = compare(expected_means[first], expected_means[second])
        consistent[(first, second)] = exact_order == sampled_order
        if exact_order != sampled_order:
            inversions.append(Inversion((first, second), exact_order, sampled_order))
    return ComparisonReport(
        spec, scheme, exact_means, expected_means, consistent, inversions
    )


@dataclass(frozen=True)
class SweepResult:
    spec: MetricSpec
    replacement: str
    m_values: Tuple[int, ...]
    means: Dict[str, Tuple[float, ...]]

    @property
    def algorithms(self):
        return list(self.means.keys())

    def value(self, algorithm, m):
        return self.means[algorithm][self.m_values.index(m)]

    def ordering(self, m):
        """
        Algorithms from best to worst at sample size m.
        """
        idx = self.m_values.index(m)
        return sorted(self.algorithms, key=lambda a: -self.means[a][idx])

    def to_frame(self):
        rows = []
        for i, m in enumerate(self.m_values):
            for algorithm in self.algorithms:
                rows.append(
                    {
                        "m": m,
                        "algorithm": algorithm,
                        "metric": self.spec.kind,
                        "k": self.spec.cutoff,
                        "scheme": self.replacement,
                        "mean": self.means[algorithm][i],
                    }
                )
        frame = pd.DataFrame(
            rows, columns=["m", "algorithm", "metric", "k", "scheme", "mean"]
        )
        frame["k"] = frame["k"].astype("Int64")
        return frame


def sweep_m(dataset, spec, m_values, replacement):
    """
    Expected sampled mean of every algorithm for each sample size in m_values.
    """
    m_values = tuple(int(m) for m in m_values)
    if len(m_values) == 0:
        raise ValidationError("Need at least one sample size")
    for previous, current in zip(m_values, m_values[1:]):
        if current <= previous:
            raise ValidationError("Sample sizes must be strictly increasing")
    schemes = [SamplingScheme(m, replacement) for m in m_values]
    means = {}
    for algorithm in dataset.algorithms:
        means[algorithm] = tuple(
            expected_mean_metric(dataset, algorithm, scheme, spec)
            for scheme in schemes
        )
    return SweepResult(spec, replacement, m_values, means)


def crossover_points(sweep):
    """
    For each pair of algorithms, the consecutive sample sizes between which
    the order of their expected means changes.
    """
    crossovers = []
    algorithms = sweep.algorithms
    for i, first in enumerate(algorithms):
        for second in algorithms[i + 1 :]:
            orders = [
                compare(a, b)
                for a, b in zip(sweep.means[first], sweep.means[second])
            ]
            for j in range(1, len(orders)):
                if orders[j] != orders[j - 1]:
                    crossovers.append(
                        Crossover(
                            (first, second),
                            sweep.m_values[j - 1],
                            sweep.m_values[j],
                            orders[j - 1],
                            orders[j],
                        )
                    )
    return crossovers
