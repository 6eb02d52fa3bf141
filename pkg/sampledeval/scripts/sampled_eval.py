"""
Command line for exact, expected and simulated sampled evaluation.

    sampled_eval exact --input ranks.csv --metric ap --metric recall@10
    sampled_eval expected --input ranks.csv --metric ap --m 99
    sampled_eval simulate --input ranks.csv --metric ap --m 99 --reps 1000 --seed 42
    sampled_eval sweep --input ranks.csv --metric ap --m-list 10,100,1000
    sampled_eval curve --n 10000 --metric ndcg --m 100 --r-max 1000
    sampled_eval consistency --input ranks.csv --metric ap --m 99
    sampled_eval reproduce-paper --output results/
"""

import sys

import click

from sampledeval import __version__
from sampledeval.framework.config import (
    DEFAULT_NUM_THREAD,
    DEFAULT_OUTPUT_DIR,
    REPRODUCE_REPS,
    REPRODUCE_SEED,
    SCHEMES,
)
from sampledeval.framework.exceptions import EvaluationError, ValidationError
from sampledeval.framework.harness import (
    cmd_consistency,
    cmd_curve,
    cmd_exact,
    cmd_expected,
    cmd_simulate,
    cmd_sweep,
)
from sampledeval.framework.metrics import MetricSpec
from sampledeval.framework.reports import (
    OUTPUT_FORMATS,
    RunConfig,
    render_frame,
    reports_to_frame,
)
from sampledeval.scripts.reproduce_paper import reproduce_paper


class SampledEvalGroup(click.Group):
    """
    Exit with 0 on success, the error's exit code for evaluation errors and 1
    for usage errors, printing the message on stderr.
    """

    def main(self, args=None, prog_name=None, **extra):
        extra.pop("standalone_mode", None)
        try:
            rv = super().main(
                args=args, prog_name=prog_name, standalone_mode=False, **extra
            )
        except EvaluationError as exc:
            click.echo("Error: {}".format(exc.message), err=True)
            sys.exit(exc.exit_code)
        except click.ClickException as exc:
            exc.show()
            sys.exit(1)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


def parse_metrics(labels):
    return tuple(MetricSpec.parse(label) for label in labels)


def parse_m_values(m_values, m_list):
    """
    Sample sizes from repeated --m options followed by a comma separated --m-list.
    """
    values = list(m_values)
    if m_list:
        for item in m_list.split(","):
            if not item.strip():
                continue
            try:
                values.append(int(item))
            except ValueError:
                raise ValidationError("Bad sample size {!r} in --m-list".format(item))
    return tuple(values)


def status(verbose, message):
    if verbose:
        click.echo(message, err=True)


def emit(text, output_path, verbose=False):
    """
    Machine output goes to the --output file if given, stdout otherwise.
    """
    if output_path:
        with open(output_path, "w") as outfile:
            outfile.write(text)
        status(verbose, "Wrote {}".format(output_path))
    else:
        click.echo(text, nl=False)


input_option = click.option(
    "--input",
    "input_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="Predicted-rank records: algorithm,instance_id,n,rank1;rank2;...",
)
metric_option = click.option(
    "--metric",
    "metrics",
    multiple=True,
    required=True,
    help="Metric to evaluate, e.g. auc, ap, ndcg, recall@10 (repeatable)",
)
m_option = click.option(
    "--m", "m_values", type=int, multiple=True, help="Sample size (repeatable)"
)
m_list_option = click.option(
    "--m-list", default=None, help="Comma separated sample sizes, e.g. 10,100,1000"
)
scheme_option = click.option(
    "--scheme",
    "replacement",
    type=click.Choice(SCHEMES),
    default=None,
    help="Draw the sampled irrelevant items with or without replacement",
)
format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(OUTPUT_FORMATS),
    default="csv",
    help="Output format",
)
output_option = click.option(
    "--output", "output_path", default=None, help="Write output here, not stdout"
)
num_thread_option = click.option(
    "--num-thread",
    type=int,
    default=DEFAULT_NUM_THREAD,
    help="No. of worker processes for simulations",
)
verbose_option = click.option(
    "--verbose", is_flag=True, default=False, help="Status messages on stderr"
)


@click.group(cls=SampledEvalGroup)
@click.version_option(__version__)
def cli():
    """
    Exact, expected and simulated ranking metrics under sampled evaluation.
    """


@cli.command("exact")
@input_option
@metric_option
@format_option
@output_option
@verbose_option
def exact(input_path, metrics, output_format, output_path, verbose):
    """Metric means over the full ranking."""
    config = RunConfig(
        "exact",
        input_path=input_path,
        specs=parse_metrics(metrics),
        output_format=output_format,
        output_path=output_path,
        verbose=verbose,
    )
    status(verbose, "Reading dataset {}".format(input_path))
    reports = cmd_exact(config)
    emit(render_frame(reports_to_frame(reports), output_format), output_path, verbose)


@cli.command("expected")
@input_option
@metric_option
@m_option
@m_list_option
@scheme_option
@format_option
@output_option
@verbose_option
def expected(
    input_path,
    metrics,
    m_values,
    m_list,
    replacement,
    output_format,
    output_path,
    verbose,
):
    """Analytic expected metric means under sampling."""
    config = RunConfig(
        "expected",
        input_path=input_path,
        specs=parse_metrics(metrics),
        m_values=parse_m_values(m_values, m_list),
        replacement=replacement,
        output_format=output_format,
        output_path=output_path,
        verbose=verbose,
    )
    status(verbose, "Reading dataset {}".format(input_path))
    reports = cmd_expected(config)
    emit(render_frame(reports_to_frame(reports), output_format), output_path, verbose)


@cli.command("simulate")
@input_option
@metric_option
@m_option
@m_list_option
@scheme_option
@click.option("--reps", type=int, default=1000, help="No. of repetitions")
@click.option("--seed", type=int, default=None, help="Master seed (required)")
@num_thread_option
@format_option
@output_option
@verbose_option
def simulate(
    input_path,
    metrics,
    m_values,
    m_list,
    replacement,
    reps,
    seed,
    num_thread,
    output_format,
    output_path,
    verbose,
):
    """Monte Carlo metric means and standard deviations under sampling."""
    config = RunConfig(
        "simulate",
        input_path=input_path,
        specs=parse_metrics(metrics),
        m_values=parse_m_values(m_values, m_list),
        replacement=replacement,
        reps=reps,
        seed=seed,
        num_thread=num_thread,
        output_format=output_format,
        output_path=output_path,
        verbose=verbose,
    )
    status(
        verbose,
        "Simulating {} repetitions with {} process(es)".format(reps, num_thread),
    )
    reports = cmd_simulate(config)
    emit(render_frame(reports_to_frame(reports), output_format), output_path, verbose)


@cli.command("sweep")
@input_option
@metric_option
@m_option
@m_list_option
@scheme_option
@format_option
@output_option
@verbose_option
def sweep(
    input_path,
    metrics,
    m_values,
    m_list,
    replacement,
    output_format,
    output_path,
    verbose,
):
    """Expected metric means over increasing sample sizes."""
    config = RunConfig(
        "sweep",
        input_path=input_path,
        specs=parse_metrics(metrics),
        m_values=parse_m_values(m_values, m_list),
        replacement=replacement,
        output_format=output_format,
        output_path=output_path,
        verbose=verbose,
    )
    status(verbose, "Reading dataset {}".format(input_path))
    emit(render_frame(cmd_sweep(config), output_format), output_path, verbose)


@cli.command("curve")
@metric_option
@click.option("--n", type=int, required=True, help="Catalog size")
@click.option("--r-min", type=int, default=1, help="Smallest rank")
@click.option("--r-max", type=int, default=None, help="Largest rank, default n")
@click.option("--r-step", type=int, default=1, help="Step between ranks")
@m_option
@m_list_option
@scheme_option
@format_option
@output_option
@verbose_option
def curve(
    metrics,
    n,
    r_min,
    r_max,
    r_step,
    m_values,
    m_list,
    replacement,
    output_format,
    output_path,
    verbose,
):
    """Metric value against rank, exact and for each sample size."""
    config = RunConfig(
        "curve",
        specs=parse_metrics(metrics),
        m_values=parse_m_values(m_values, m_list),
        replacement=replacement,
        n=n,
        r_min=r_min,
        r_max=r_max,
        r_step=r_step,
        output_format=output_format,
        output_path=output_path,
        verbose=verbose,
    )
    emit(render_frame(cmd_curve(config), output_format), output_path, verbose)


@cli.command("consistency")
@input_option
@metric_option
@m_option
@m_list_option
@scheme_option
@output_option
@verbose_option
def consistency(
    input_path, metrics, m_values, m_list, replacement, output_path, verbose
):
    """Do the expected sampled means order algorithms like the exact means?"""
    config = RunConfig(
        "consistency",
        input_path=input_path,
        specs=parse_metrics(metrics),
        m_values=parse_m_values(m_values, m_list),
        replacement=replacement,
        output_path=output_path,
        verbose=verbose,
    )
    status(verbose, "Reading dataset {}".format(input_path))
    reports = cmd_consistency(config)
    text = "\n\n".join(report.render() for report in reports) + "\n"
    emit(text, output_path, verbose)


@cli.command("reproduce-paper")
@click.option(
    "--output",
    "output_dir",
    default=DEFAULT_OUTPUT_DIR,
    help="Directory for the artifacts",
)
@click.option("--seed", type=int, default=REPRODUCE_SEED, help="Master seed")
@click.option("--reps", type=int, default=REPRODUCE_REPS, help="No. of repetitions")
@num_thread_option
@verbose_option
def reproduce(output_dir, seed, reps, num_thread, verbose):
    """Rebuild the running-example tables and figure data."""
    reproduce_paper(
        output_dir, seed=seed, reps=reps, num_thread=num_thread, verbose=verbose
    )


def main():
    cli()


if __name__ == "__main__":
    main()
