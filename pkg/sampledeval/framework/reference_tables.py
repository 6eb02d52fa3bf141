"""
Published values for the running example (three algorithms, five instances
each, n = 10000), rounded to three decimals.
"""

REFERENCE_METRICS = ("auc", "ap", "ndcg", "recall@10")

RUNNING_EXAMPLE_RANKS = {
    "A": [100, 100, 100, 100, 100],
    "B": [40, 40, 8437, 9266, 4482],
    "C": [212, 2, 743, 5342, 1548],
}

RUNNING_EXAMPLE_N = 10000

# exact means over the full ranking
EXACT_TABLE = {
    "auc": {"A": 0.990, "B": 0.555, "C": 0.843},
    "ap": {"A": 0.010, "B": 0.010, "C": 0.101},
    "ndcg": {"A": 0.150, "B": 0.122, "C": 0.208},
    "recall@10": {"A": 0.000, "B": 0.000, "C": 0.200},
}

# m = 99 sampled metrics: (mean, std) over 1000 repetitions
SAMPLED_TABLE = {
    "auc": {"A": (0.990, 0.004), "B": (0.555, 0.014), "C": (0.843, 0.014)},
    "ap": {"A": (0.630, 0.129), "B": (0.336, 0.073), "C": (0.325, 0.050)},
    "ndcg": {"A": (0.724, 0.097), "B": (0.444, 0.054), "C": (0.460, 0.039)},
    "recall@10": {"A": (1.000, 0.000), "B": (0.400, 0.000), "C": (0.567, 0.092)},
}

SAMPLED_TABLE_M = 99

# analytic expected means must land this close to the sampled table means
EXPECTED_TOLERANCE = 0.02
# simulated means and stds must land this close
SIMULATED_TOLERANCE = 0.03
