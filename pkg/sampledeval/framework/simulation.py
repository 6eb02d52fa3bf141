"""
Monte Carlo version of sampled evaluation: every repetition re-ranks the
relevant items of every instance among a fresh sample of irrelevant items,
and records the dataset mean of each metric.

Repetition i always uses substream i of the master seed, so the result does
not depend on how many worker processes share the work.
"""

from multiprocessing import Process, Queue
from queue import Empty

import numpy as np
from tqdm import tqdm

from sampledeval.framework.config import WORKER_POLL_SECONDS
from sampledeval.framework.exceptions import EvaluationError
from sampledeval.framework.metrics import PredictedRanks, as_integer, exact_metric
from sampledeval.framework.rank_sampling import make_rng, monte_carlo_ranks


def simulate_repetition(dataset, specs, scheme, seed, index):
    """
    Dataset means for one repetition, as an array of shape
    (number of algorithms, number of specs).
    """
    rng = make_rng(seed, index)
    algorithms = dataset.algorithms
    means = np.empty((len(algorithms), len(specs)))
    for a, algorithm in enumerate(algorithms):
        instances = dataset.instances(algorithm)
        values = np.empty((len(instances), len(specs)))
        for i, (_, predicted) in enumerate(instances):
            positions = monte_carlo_ranks(predicted, scheme, rng)
            sampled = PredictedRanks(scheme.m + predicted.size, positions)
            for s, spec in enumerate(specs):
                values[i, s] = exact_metric(sampled, spec)
        means[a] = values.mean(axis=0)
    return means


def allocate_repetitions(queue, results, dataset, specs, scheme, seed):
    """
    Take repetition indices off the queue until "DONE", and put
    (index, means, error) on the results queue.
    """
    while True:
        index = queue.get()
        if index == "DONE":
            break
        try:
            results.put(
                (index, simulate_repetition(dataset, specs, scheme, seed, index), None)
            )
        except Exception as exc:
            results.put((index, None, str(exc)))


def collect_results(results, procs, outcomes, progress_bar, poll_seconds=None):
    """
    Fill outcomes[index] from the results queue, one entry per repetition.
    Raises EvaluationError if a repetition failed, or if a worker died
    before every repetition came back.
    """
    if poll_seconds is None:
        poll_seconds = WORKER_POLL_SECONDS
    errors = []
    remaining = len(outcomes)
    drained = False
    while remaining > 0:
        try:
            index, means, error = results.get(timeout=poll_seconds)
        except Empty:
            crashed = [p for p in procs if p.exitcode not in (None, 0)]
            if not crashed and not any(p.is_alive() for p in procs) and not drained:
                # results of workers that just exited may still be in the pipe
                drained = True
                continue
            if crashed or drained:
                for p in procs:
                    if p.is_alive():
                        p.terminate()
                raise EvaluationError(
                    "{} worker(s) stopped with {} repetitions outstanding".format(
                        len(crashed) or len(procs), remaining
                    ),
                    payload={"exit_codes": [p.exitcode for p in procs]},
                )
            continue
        remaining -= 1
        if error is not None:
            errors.append("repetition {}: {}".format(index, error))
        else:
            outcomes[index] = means
        progress_bar.update(1)
    if errors:
        raise EvaluationError("; ".join(errors))


def run_simulation(dataset, specs, scheme, reps, seed, num_thread=1, progress=False):
    """
    Run `reps` repetitions, in parallel if num_thread > 1.
    Returns {(algorithm, spec): (mean, std)} over repetitions, std with ddof=0.
    """
    reps = as_integer(reps, "repetitions", minimum=1)
    seed = as_integer(seed, "seed", minimum=0)
    num_thread = as_integer(num_thread, "num_thread", minimum=1)
    specs = tuple(specs)
    # fail in the parent rather than inside a worker
    for algorithm in dataset.algorithms:
        for _, predicted in dataset.instances(algorithm):
            scheme.validate_for(predicted.n, predicted.size)

    algorithms = dataset.algorithms
    outcomes = np.empty((reps, len(algorithms), len(specs)))
    progress_bar = tqdm(total=reps, desc="repetitions", disable=not progress)
    if num_thread > 1:
        queue = Queue()
        results = Queue()
        procs = []
        for _ in range(min(num_thread, reps)):
            processor = Process(
                target=allocate_repetitions,
                args=(queue, results, dataset, specs, scheme, seed),
            )
            processor.daemon = True
            processor.start()
            procs.append(processor)
        for i in range(reps):
            queue.put(i)
        for _ in procs:
            queue.put("DONE")
        try:
            collect_results(results, procs, outcomes, progress_bar)
        finally:
            progress_bar.close()
        for p in procs:
            p.join()
    else:
        # single process
        for i in range(reps):
            outcomes[i] = simulate_repetition(dataset, specs, scheme, seed, i)
            progress_bar.update(1)
    progress_bar.close()

    mean = outcomes.mean(axis=0)
    std = outcomes.std(axis=0)
    summary = {}
    for a, algorithm in enumerate(algorithms):
        for s, spec in enumerate(specs):
            summary[(algorithm, spec)] = (float(mean[a, s]), float(std[a, s]))
    return summary
