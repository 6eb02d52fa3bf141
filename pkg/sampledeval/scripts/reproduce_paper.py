"""
Rebuild the running-example tables and the figure data, write them as
artifacts, and check the exact table against the published values.
"""

import os

import click

from sampledeval.framework.config import (
    DEFAULT_NUM_THREAD,
    REFERENCE_DECIMALS,
    REPRODUCE_M,
    REPRODUCE_REPS,
    REPRODUCE_SEED,
    WITH_REPLACEMENT,
    WITHOUT_REPLACEMENT,
)
from sampledeval.framework.dataset import RUNNING_EXAMPLE_FILE, running_example
from sampledeval.framework.exceptions import ReproductionMismatch
from sampledeval.framework.harness import (
    cmd_consistency,
    cmd_curve,
    cmd_exact,
    cmd_expected,
    cmd_simulate,
    cmd_sweep,
)
from sampledeval.framework.metrics import MetricSpec
from sampledeval.framework.reference_tables import (
    EXACT_TABLE,
    EXPECTED_TOLERANCE,
    REFERENCE_METRICS,
    RUNNING_EXAMPLE_N,
    SAMPLED_TABLE,
    SIMULATED_TOLERANCE,
)
from sampledeval.framework.reports import RunConfig, render_frame, reports_to_frame

SWEEP_M_VALUES = (1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 9999)
SAMPLED_CURVE_M = (10, 100, 1000)
SAMPLED_CURVE_R_MAX = 1000


def exact_mismatches(reports):
    """
    Cells of the exact table that differ from the published value after
    rounding to its precision.
    """
    mismatches = []
    for report in reports:
        reference = EXACT_TABLE[report.spec.name][report.algorithm]
        if round(report.mean, REFERENCE_DECIMALS) != reference:
            mismatches.append(
                "{} {}: computed {:.6f}, published {:.3f}".format(
                    report.algorithm, report.spec.name, report.mean, reference
                )
            )
    return mismatches


def sampled_deviations(reports, tolerance, check_std=False):
    """
    Cells more than `tolerance` away from the published m=99 sampled table.
    """
    deviations = []
    for report in reports:
        mean, std = SAMPLED_TABLE[report.spec.name][report.algorithm]
        if abs(report.mean - mean) > tolerance:
            deviations.append(
                "{} {} mean: {:.3f} vs {:.3f}".format(
                    report.algorithm, report.spec.name, report.mean, mean
                )
            )
        if check_std and abs(report.std - std) > tolerance:
            deviations.append(
                "{} {} std: {:.3f} vs {:.3f}".format(
                    report.algorithm, report.spec.name, report.std, std
                )
            )
    return deviations


def write_text(output_dir, filename, text):
    path = os.path.join(output_dir, filename)
    with open(path, "w") as outfile:
        outfile.write(text)
    return path


def reproduce_paper(
    output_dir,
    seed=REPRODUCE_SEED,
    reps=REPRODUCE_REPS,
    num_thread=DEFAULT_NUM_THREAD,
    verbose=False,
):
    """
    Write every artifact into output_dir and return the list of paths.
    Raises ReproductionMismatch, after writing, if the exact table is off.
    """
    os.makedirs(output_dir, exist_ok=True)
    dataset = running_example()
    specs = tuple(MetricSpec.parse(label) for label in REFERENCE_METRICS)

    def config(command, **kwargs):
        return RunConfig(
            command,
            input_path=RUNNING_EXAMPLE_FILE,
            specs=specs,
            num_thread=num_thread,
            verbose=verbose,
            **kwargs
        )

    written = []

    exact = cmd_exact(config("exact"), dataset)
    written.append(
        write_text(output_dir, "exact_table.csv", render_frame(reports_to_frame(exact)))
    )

    expected = cmd_expected(
        config("expected", m_values=(REPRODUCE_M,), replacement=WITH_REPLACEMENT),
        dataset,
    )
    written.append(
        write_text(
            output_dir, "expected_table.csv", render_frame(reports_to_frame(expected))
        )
    )

    simulated = cmd_simulate(
        config(
            "simulate",
            m_values=(REPRODUCE_M,),
            replacement=WITHOUT_REPLACEMENT,
            reps=reps,
            seed=seed,
        ),
        dataset,
    )
    written.append(
        write_text(
            output_dir, "simulated_table.csv", render_frame(reports_to_frame(simulated))
        )
    )

    curves = cmd_curve(
        RunConfig("curve", specs=specs, n=RUNNING_EXAMPLE_N, verbose=verbose)
    )
    written.append(
        write_text(
            output_dir,
            "metric_curves.csv",
            render_frame(curves),
        )
    )

    sampled_curves = cmd_curve(
        RunConfig(
            "curve",
            specs=specs,
            n=RUNNING_EXAMPLE_N,
            r_max=SAMPLED_CURVE_R_MAX,
            m_values=SAMPLED_CURVE_M,
            replacement=WITH_REPLACEMENT,
            verbose=verbose,
        )
    )
    written.append(
        write_text(
            output_dir,
            "sampled_curves.csv",
            render_frame(sampled_curves),
        )
    )

    sweep = cmd_sweep(
        config("sweep", m_values=SWEEP_M_VALUES, replacement=WITH_REPLACEMENT),
        dataset,
    )
    written.append(write_text(output_dir, "m_sweep.csv", render_frame(sweep)))

    comparisons = cmd_consistency(
        config("consistency", m_values=(REPRODUCE_M,), replacement=WITH_REPLACEMENT),
        dataset,
    )
    written.append(
        write_text(
            output_dir,
            "consistency.txt",
            "\n\n".join(report.render() for report in comparisons) + "\n",
        )
    )

    mismatches = exact_mismatches(exact)
    click.echo(
        "exact table: {}".format(
            "matches published values"
            if not mismatches
            else "{} cells differ".format(len(mismatches))
        ),
        err=True,
    )
    for label, reports, tolerance, check_std in (
        ("expected table", expected, EXPECTED_TOLERANCE, False),
        ("simulated table", simulated, SIMULATED_TOLERANCE, True),
    ):
        deviations = sampled_deviations(reports, tolerance, check_std)
        click.echo(
            "{}: {}".format(
                label,
                "within {} of published values".format(tolerance)
                if not deviations
                else "; ".join(deviations),
            ),
            err=True,
        )
    inconsistent = [r.spec.name for r in comparisons if not r.is_consistent]
    click.echo(
        "orderings changed by sampling at m={}: {}".format(
            REPRODUCE_M, ", ".join(inconsistent) if inconsistent else "none"
        ),
        err=True,
    )
    for path in written:
        click.echo("Wrote {}".format(path), err=True)

    if mismatches:
        raise ReproductionMismatch(
            "Exact table differs from published values: {}".format(
                "; ".join(mismatches)
            ),
            payload={"mismatches": mismatches},
        )
    return written

