"""
Test run configurations, the evaluation commands and their csv/json output.
"""

import json

import numpy as np
import pytest

from sampledeval.framework.dataset import RUNNING_EXAMPLE_FILE
from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.harness import (
    CURVE_COLUMNS,
    cmd_curve,
    cmd_exact,
    cmd_expected,
    cmd_simulate,
)
from sampledeval.framework.metrics import AUC, AVERAGE_PRECISION, MetricSpec
from sampledeval.framework.reference_tables import (
    EXACT_TABLE,
    EXPECTED_TOLERANCE,
    REFERENCE_METRICS,
    SAMPLED_TABLE,
)
from sampledeval.framework.reports import (
    EXACT,
    SIMULATED,
    MetricReport,
    RunConfig,
    render_frame,
    reports_to_frame,
)

REFERENCE_SPECS = tuple(MetricSpec.parse(label) for label in REFERENCE_METRICS)


def test_exact_table():
    reports = cmd_exact(
        RunConfig("exact", input_path=RUNNING_EXAMPLE_FILE, specs=REFERENCE_SPECS)
    )
    assert len(reports) == 12
    for report in reports:
        assert round(report.mean, 3) == EXACT_TABLE[report.spec.name][report.algorithm]


def test_expected_table():
    config = RunConfig(
        "expected",
        input_path=RUNNING_EXAMPLE_FILE,
        specs=REFERENCE_SPECS,
        m_values=(99,),
    )
    assert config.scheme_kind == "with"
    for report in cmd_expected(config):
        published, _ = SAMPLED_TABLE[report.spec.name][report.algorithm]
        assert report.mean == pytest.approx(published, abs=EXPECTED_TOLERANCE)
        assert (report.m, report.scheme) == (99, "with")


def test_expected_rejects_multi_relevant_input(tmp_path):
    path = tmp_path / "multi.csv"
    path.write_text("P,u1,50,1;4\n")
    config = RunConfig(
        "expected", input_path=str(path), specs=(MetricSpec(AUC),), m_values=(10,)
    )
    with pytest.raises(ValidationError):
        cmd_expected(config)


def test_simulate_defaults_to_distinct_samples(tmp_path):
    path = tmp_path / "multi.csv"
    path.write_text("P,u1,50,1;4\nP,u2,50,7\n")
    config = RunConfig(
        "simulate",
        input_path=str(path),
        specs=(MetricSpec(AVERAGE_PRECISION),),
        m_values=(10,),
        reps=20,
        seed=3,
    )
    (report,) = cmd_simulate(config)
    assert report.scheme == "without"
    assert report.reps == 20
    assert report.std is not None


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig("exact", specs=(MetricSpec(AUC),))
    with pytest.raises(ValidationError):
        RunConfig("exact", input_path="ranks.csv")
    with pytest.raises(ValidationError):
        RunConfig(
            "simulate", input_path="ranks.csv", specs=(MetricSpec(AUC),), m_values=(5,)
        )
    with pytest.raises(ValidationError):
        RunConfig("expected", input_path="ranks.csv", specs=(MetricSpec(AUC),))
    with pytest.raises(ValidationError):
        RunConfig(
            "exact",
            input_path="ranks.csv",
            specs=(MetricSpec(AUC),),
            output_format="xml",
        )
    with pytest.raises(ValidationError):
        RunConfig("curve", specs=(MetricSpec(AUC),), n=100, replacement="maybe")
    with pytest.raises(ValidationError):
        RunConfig("plot")


def test_report_rows():
    with pytest.raises(ValidationError):
        MetricReport("A", MetricSpec(AUC), EXACT, 0.5, std=0.1)
    with pytest.raises(ValidationError):
        MetricReport("A", MetricSpec(AUC), EXACT, 1.5)
    frame = reports_to_frame(
        [
            MetricReport("A", MetricSpec(AUC), EXACT, 0.99),
            MetricReport(
                "A",
                MetricSpec.parse("recall@10"),
                SIMULATED,
                0.5,
                m=99,
                scheme="without",
                reps=10,
                std=0.25,
            ),
        ]
    )
    lines = render_frame(frame, "csv").splitlines()
    assert lines[0] == "algorithm,metric,k,mode,m,scheme,reps,mean,std"
    assert lines[1] == "A,auc,,exact,,,,0.990000,"
    assert lines[2] == "A,recall,10,simulated,99,without,10,0.500000,0.250000"
    records = json.loads(render_frame(frame, "json"))
    assert records[0]["k"] is None
    assert records[0]["std"] is None
    assert records[1]["k"] == 10
    assert records[1]["std"] == 0.25


def test_curve_frame():
    config = RunConfig(
        "curve",
        specs=(MetricSpec(AVERAGE_PRECISION),),
        n=1000,
        r_max=50,
        r_step=7,
        m_values=(10, 100),
    )
    frame = cmd_curve(config)
    assert list(frame.columns) == CURVE_COLUMNS
    assert len(frame) == 3 * 8
    exact = frame[frame["mode"] == EXACT]
    assert list(exact["r"]) == list(range(1, 51, 7))
    assert exact["value"].iloc[1] == pytest.approx(1 / 8)
    assert set(frame["m"].dropna()) == {10, 100}


def test_curve_rank_range_checked():
    with pytest.raises(ValidationError):
        cmd_curve(RunConfig("curve", specs=(MetricSpec(AUC),), n=100, r_max=101))
    with pytest.raises(ValidationError):
        cmd_curve(
            RunConfig("curve", specs=(MetricSpec(AUC),), n=100, r_min=50, r_max=10)
        )
    with pytest.raises(ValidationError):
        cmd_curve(RunConfig("curve", specs=(MetricSpec(AUC),)))


@pytest.mark.parametrize("replacement", ["with", "without"])
def test_expected_auc_output_matches_exact_output(tmp_path, replacement):
    rng = np.random.default_rng(17)
    for trial in range(20):
        n = int(rng.integers(2, 5001))
        path = tmp_path / "ranks{}.csv".format(trial)
        lines = [
            "{},x{},{},{}".format(algorithm, i, n, int(rng.integers(1, n + 1)))
            for algorithm in ("A", "B")
            for i in range(3)
        ]
        path.write_text("\n".join(lines) + "\n")
        m = int(rng.integers(1, n))
        specs = (MetricSpec(AUC),)
        exact = cmd_exact(RunConfig("exact", input_path=str(path), specs=specs))
        expected = cmd_expected(
            RunConfig(
                "expected",
                input_path=str(path),
                specs=specs,
                m_values=(m,),
                replacement=replacement,
            )
        )
        exact_means = render_frame(reports_to_frame(exact), "csv").splitlines()
        expected_means = render_frame(reports_to_frame(expected), "csv").splitlines()
        assert [line.split(",")[-2] for line in exact_means] == [
            line.split(",")[-2] for line in expected_means
        ]
