"""
The evaluation commands behind the `sampled_eval` command line.
Each takes a RunConfig and returns reports (or a frame), without doing any I/O
beyond reading the input file.
"""

import numpy as np
import pandas as pd

from sampledeval.framework.consistency import check_consistency, sweep_m
from sampledeval.framework.dataset import ingest
from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.expected_metrics import expected_curve, expected_mean_metric
from sampledeval.framework.metrics import as_integer, mean_metric, metric_curve
from sampledeval.framework.reports import (
    EXACT,
    EXPECTED,
    SIMULATED,
    MetricReport,
)
from sampledeval.framework.simulation import run_simulation

CURVE_COLUMNS = ["r", "metric", "k", "mode", "m", "scheme", "value"]


def load_dataset(config):
    dataset = ingest(config.input_path)
    dataset.validate()
    return dataset


def cmd_exact(config, dataset=None):
    """
    Exact mean of every metric for every algorithm.
    """
    if dataset is None:
        dataset = load_dataset(config)
    reports = []
    for algorithm in dataset.algorithms:
        for spec in config.specs:
            reports.append(
                MetricReport(
                    algorithm, spec, EXACT, mean_metric(dataset, algorithm, spec)
                )
            )
    return reports


def cmd_expected(config, dataset=None):
    """
    Analytic expected sampled mean for every sample size, algorithm and metric.
    """
    if dataset is None:
        dataset = load_dataset(config)
    if not dataset.all_single_relevant():
        raise ValidationError(
            "Expected metrics need exactly one relevant item per instance; "
            "use `sampled_eval simulate` for instances with several"
        )
    reports = []
    for scheme in config.schemes():
        for algorithm in dataset.algorithms:
            for spec in config.specs:
                reports.append(
                    MetricReport(
                        algorithm,
                        spec,
                        EXPECTED,
                        expected_mean_metric(dataset, algorithm, scheme, spec),
                        m=scheme.m,
                        scheme=scheme.replacement,
                    )
                )
    return reports


def cmd_simulate(config, dataset=None):
    """
    Monte Carlo mean and standard deviation over repetitions.
    """
    if dataset is None:
        dataset = load_dataset(config)
    reports = []
    for scheme in config.schemes():
        summary = run_simulation(
            dataset,
            config.specs,
            scheme,
            config.reps,
            config.seed,
            num_thread=config.num_thread,
            progress=config.verbose,
        )
        for algorithm in dataset.algorithms:
            for spec in config.specs:
                mean, std = summary[(algorithm, spec)]
                reports.append(
                    MetricReport(
                        algorithm,
                        spec,
                        SIMULATED,
                        mean,
                        m=scheme.m,
                        scheme=scheme.replacement,
                        reps=config.reps,
                        std=std,
                    )
                )
    return reports


def cmd_sweep(config, dataset=None):
    """
    Expected means over the sample sizes in config.m_values, one frame row per
    (m, algorithm, metric).
    """
    if dataset is None:
        dataset = load_dataset(config)
    frames = [
        sweep_m(dataset, spec, config.m_values, config.scheme_kind).to_frame()
        for spec in config.specs
    ]
    return pd.concat(frames, ignore_index=True)


def curve_ranks(config):
    n = as_integer(config.n, "catalog size n", minimum=2)
    r_min = as_integer(config.r_min, "r_min", minimum=1)
    r_max = n if config.r_max is None else as_integer(config.r_max, "r_max", minimum=1)
    r_step = as_integer(config.r_step, "r_step", minimum=1)
    if r_max > n or r_min > r_max:
        raise ValidationError(
            "Rank range [{}, {}] must lie within [1, {}]".format(r_min, r_max, n)
        )
    return np.arange(r_min, r_max + 1, r_step)


def cmd_curve(config):
    """
    Metric value against rank: the exact curve for every metric, plus the
    expected sampled curve for every sample size.
    """
    if len(config.specs) == 0:
        raise ValidationError("curve needs at least one --metric")
    ranks = curve_ranks(config)
    frames = []

    def _frame(spec, mode, m, scheme, values):
        frame = pd.DataFrame(
            {
                "r": ranks,
                "metric": spec.kind,
                "k": spec.cutoff,
                "mode": mode,
                "m": m,
                "scheme": scheme,
                "value": values,
            },
            columns=CURVE_COLUMNS,
        )
        frame["k"] = frame["k"].astype("Int64")
        frame["m"] = frame["m"].astype("Int64")
        return frame

    for spec in config.specs:
        exact = metric_curve(ranks, config.n, spec)
        frames.append(_frame(spec, EXACT, None, None, exact))
    for scheme in config.schemes():
        scheme.validate_for(config.n, 1)
        curves = expected_curve(ranks, config.n, scheme, config.specs)
        for spec in config.specs:
            frames.append(
                _frame(spec, EXPECTED, scheme.m, scheme.replacement, curves[spec])
            )
    return pd.concat(frames, ignore_index=True)


def cmd_consistency(config, dataset=None):
    """
    One ComparisonReport per (sample size, metric).
    """
    if dataset is None:
        dataset = load_dataset(config)
    return [
        check_consistency(dataset, spec, scheme)
        for scheme in config.schemes()
        for spec in config.specs
    ]
