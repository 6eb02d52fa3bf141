"""
Run configuration and metric reports for the command line harness, and their
csv / json rendering.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import pandas as pd

from sampledeval.framework.config import (
    DEFAULT_ANALYTIC_SCHEME,
    DEFAULT_NUM_THREAD,
    DEFAULT_SIMULATION_SCHEME,
    OUTPUT_DECIMALS,
    SCHEMES,
)
from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.metrics import MetricSpec, as_integer
from sampledeval.framework.rank_sampling import SamplingScheme

EXACT = "exact"
EXPECTED = "expected"
SIMULATED = "simulated"
MODES = (EXACT, EXPECTED, SIMULATED)

OUTPUT_FORMATS = ("csv", "json")

REPORT_COLUMNS = [
    "algorithm",
    "metric",
    "k",
    "mode",
    "m",
    "scheme",
    "reps",
    "mean",
    "std",
]

COMMANDS = (
    "exact",
    "expected",
    "simulate",
    "sweep",
    "curve",
    "consistency",
    "reproduce-paper",
)

# commands that read an input file and evaluate at least one metric
NEEDS_INPUT = ("exact", "expected", "simulate", "sweep", "consistency")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: Optional[str] = None
    specs: Tuple[MetricSpec, ...] = ()
    m_values: Tuple[int, ...] = ()
    replacement: Optional[str] = None
    reps: int = 1
    seed: Optional[int] = None
    output_format: str = "csv"
    output_path: Optional[str] = None
    num_thread: int = DEFAULT_NUM_THREAD
    n: Optional[int] = None
    r_min: int = 1
    r_max: Optional[int] = None
    r_step: int = 1
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError("Unknown command {}".format(self.command))
        if self.output_format not in OUTPUT_FORMATS:
            raise ValidationError(
                "Output format must be one of {}".format(", ".join(OUTPUT_FORMATS))
            )
        if self.replacement is not None and self.replacement not in SCHEMES:
            raise ValidationError(
                "Scheme must be one of {}".format(", ".join(SCHEMES))
            )
        if self.command in NEEDS_INPUT:
            if not self.input_path:
                raise ValidationError("{} needs --input".format(self.command))
            if len(self.specs) == 0:
                raise ValidationError(
                    "{} needs at least one --metric".format(self.command)
                )
        as_integer(self.reps, "repetitions", minimum=1)
        as_integer(self.num_thread, "num_thread", minimum=1)
        if self.command == "simulate" and self.seed is None:
            raise ValidationError("simulate needs an explicit --seed")
        if self.command in ("expected", "simulate", "sweep", "consistency"):
            if len(self.m_values) == 0:
                raise ValidationError(
                    "{} needs at least one sample size".format(self.command)
                )
        for m in self.m_values:
            as_integer(m, "sample size m", minimum=1)

    @property
    def scheme_kind(self):
        """
        Requested replacement mode, or the default for this command.
        """
        if self.replacement is not None:
            return self.replacement
        if self.command == "simulate":
            return DEFAULT_SIMULATION_SCHEME
        return DEFAULT_ANALYTIC_SCHEME

    def schemes(self):
        return [SamplingScheme(m, self.scheme_kind) for m in self.m_values]


@dataclass(frozen=True)
class MetricReport:
    """
    One output row: the mean of one metric for one algorithm.
    std is only present for simulated reports.
    """

    algorithm: str
    spec: MetricSpec
    mode: str
    mean: float
    m: Optional[int] = None
    scheme: Optional[str] = None
    reps: Optional[int] = None
    std: Optional[float] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError("Unknown report mode {}".format(self.mode))
        if self.mode != SIMULATED and self.std is not None:
            raise ValidationError("std is only reported for simulated means")
        if not -1e-9 <= self.mean <= 1.0 + 1e-9:
            raise ValidationError("Mean {} is outside [0, 1]".format(self.mean))

    def to_row(self):
        return {
            "algorithm": self.algorithm,
            "metric": self.spec.kind,
            "k": self.spec.cutoff,
            "mode": self.mode,
            "m": self.m,
            "scheme": self.scheme,
            "reps": self.reps,
            "mean": self.mean,
            "std": self.std,
        }


def reports_to_frame(reports):
    frame = pd.DataFrame([r.to_row() for r in reports], columns=REPORT_COLUMNS)
    for column in ("k", "m", "reps"):
        frame[column] = frame[column].astype("Int64")
    for column in ("mean", "std"):
        frame[column] = frame[column].astype(float)
    return frame


def render_frame(frame, output_format="csv"):
    """
    Text for a report frame: csv with a header and empty fields for missing
    values, or json records with nulls.
    """
    if output_format == "csv":
        return frame.to_csv(
            index=False, float_format="%.{}f".format(OUTPUT_DECIMALS), na_rep=""
        )
    if output_format == "json":
        return frame.to_json(orient="records", double_precision=OUTPUT_DECIMALS) + "\n"
    raise ValidationError("Unknown output format {}".format(output_format))
