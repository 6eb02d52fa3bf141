"""
Defaults for evaluation runs.
Thread count and output directory can be overridden by environment variables.
"""

import os
from sampledeval import TMPDIR

## Ties between mean metric values below this are treated as equality
TIE_TOLERANCE = 1e-12

## A rank PMF must sum to one within this
PMF_SUM_TOLERANCE = 1e-12

## rank PMFs are memoised only up to this sample size
PMF_CACHE_MAX_M = 1000
PMF_CACHE_SIZE = 4096

## seconds to wait on worker results before checking the workers are alive
WORKER_POLL_SECONDS = 5.0

## decimals printed in csv/json output, and used to compare with reference tables
OUTPUT_DECIMALS = 6
REFERENCE_DECIMALS = 3

WITH_REPLACEMENT = "with"
WITHOUT_REPLACEMENT = "without"
SCHEMES = (WITH_REPLACEMENT, WITHOUT_REPLACEMENT)

## the analytic engine follows the Binomial rank law, simulation draws distinct items
DEFAULT_ANALYTIC_SCHEME = WITH_REPLACEMENT
DEFAULT_SIMULATION_SCHEME = WITHOUT_REPLACEMENT

## settings used by `sampled_eval reproduce-paper`
REPRODUCE_SEED = 42
REPRODUCE_REPS = 1000
REPRODUCE_M = 99

DEFAULT_NUM_THREAD = 1
if "SAMPLEDEVAL_NUM_THREAD" in os.environ.keys():
    try:
        DEFAULT_NUM_THREAD = int(os.environ["SAMPLEDEVAL_NUM_THREAD"])
    except ValueError:
        raise RuntimeError(
            "SAMPLEDEVAL_NUM_THREAD must be an integer, got {}".format(
                os.environ["SAMPLEDEVAL_NUM_THREAD"]
            )
        )
    if DEFAULT_NUM_THREAD < 1:
        raise RuntimeError("SAMPLEDEVAL_NUM_THREAD must be at least 1")

## where reproduce-paper puts its artifacts unless told otherwise
DEFAULT_OUTPUT_DIR = os.path.join(TMPDIR, "sampledeval")
if "SAMPLEDEVAL_OUTPUT_DIR" in os.environ.keys():
    DEFAULT_OUTPUT_DIR = os.environ["SAMPLEDEVAL_OUTPUT_DIR"]
