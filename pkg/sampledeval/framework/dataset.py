"""
Evaluation datasets: for every algorithm, the predicted ranks of the relevant
items on each instance.

Input files have one record per line,

    algorithm,instance_id,n,ranks

where ranks is a semicolon-separated list, e.g. "C,x2,10000,2".  Blank lines
and lines starting with "#" are skipped, as is a header line starting with
"algorithm".
"""

import os
from collections import OrderedDict

from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.metrics import PredictedRanks

RUNNING_EXAMPLE_FILE = os.path.join(
    os.path.dirname(os.path.dirname(__file__)), "data", "running_example.csv"
)


class EvalDataset(object):
    """
    Ordered mapping from algorithm name to a list of (instance_id, PredictedRanks).
    Algorithms keep the order in which they were first added.
    """

    def __init__(self):
        self._instances = OrderedDict()

    def add_instance(self, algorithm, instance_id, predicted):
        """
        Add one instance.  Instance ids must be unique per algorithm.
        """
        if not isinstance(predicted, PredictedRanks):
            raise ValidationError("Expected PredictedRanks, got {!r}".format(predicted))
        instances = self._instances.setdefault(algorithm, [])
        for existing_id, _ in instances:
            if existing_id == instance_id:
                raise ValidationError(
                    "Duplicate instance {} for algorithm {}".format(
                        instance_id, algorithm
                    )
                )
        instances.append((instance_id, predicted))

    @classmethod
    def from_ranks(cls, ranks_per_algorithm, n):
        """
        Convenience constructor for single-relevant-item datasets, e.g.
        {"A": [100, 100], "B": [40, 8437]} with a common catalog size n.
        Instance ids are "x1", "x2", ...
        """
        dataset = cls()
        for algorithm, ranks in ranks_per_algorithm.items():
            for i, r in enumerate(ranks):
                dataset.add_instance(
                    algorithm, "x{}".format(i + 1), PredictedRanks.single(r, n)
                )
        dataset.validate()
        return dataset

    @property
    def algorithms(self):
        return list(self._instances.keys())

    def instances(self, algorithm):
        if algorithm not in self._instances:
            raise ValidationError("Unknown algorithm {}".format(algorithm))
        return list(self._instances[algorithm])

    def all_single_relevant(self, algorithm=None):
        """
        True if every instance (of one algorithm, or of all) has exactly one
        relevant item.
        """
        algorithms = [algorithm] if algorithm is not None else self.algorithms
        for alg in algorithms:
            for _, predicted in self.instances(alg):
                if predicted.size != 1:
                    return False
        return True

    def validate(self):
        if len(self._instances) == 0:
            raise ValidationError("Dataset has no instances")
        for algorithm, instances in self._instances.items():
            if len(instances) == 0:
                raise ValidationError("Algorithm {} has no instances".format(algorithm))
        return True

    def __len__(self):
        return sum(len(v) for v in self._instances.values())

    def __repr__(self):
        return "EvalDataset({})".format(
            ", ".join(
                "{}: {} instances".format(k, len(v)) for k, v in self._instances.items()
            )
        )


def parse_record(line, line_number):
    """
    Turn one input line into (algorithm, instance_id, PredictedRanks).
    """
    fields = [f.strip() for f in line.split(",")]
    if len(fields) != 4:
        raise ValidationError(
            "line {}: expected 4 fields (algorithm,instance_id,n,ranks), got {}".format(
                line_number, len(fields)
            ),
            payload={"line_number": line_number},
        )
    algorithm, instance_id, n_field, ranks_field = fields
    if not algorithm or not instance_id:
        raise ValidationError(
            "line {}: algorithm and instance_id must not be empty".format(line_number),
            payload={"line_number": line_number},
        )
    try:
        n = int(n_field)
        ranks = tuple(int(r) for r in ranks_field.split(";") if r.strip())
    except ValueError:
        raise ValidationError(
            "line {}: n and ranks must be integers".format(line_number),
            payload={"line_number": line_number},
        )
    try:
        predicted = PredictedRanks(n, ranks)
    except ValidationError as exc:
        raise ValidationError(
            "line {}: {}".format(line_number, exc.message),
            payload={"line_number": line_number},
        )
    return algorithm, instance_id, predicted


def ingest(path):
    """
    Read and validate a predicted-ranks file into an EvalDataset.
    """
    if not os.path.exists(path):
        raise ValidationError("Input file {} not found".format(path))
    dataset = EvalDataset()
    with open(path, "rb") as infile:
        for line_number, raw in enumerate(infile, start=1):
            try:
                line = raw.decode("utf-8-sig").strip()
            except UnicodeDecodeError:
                raise ValidationError(
                    "line {}: not valid UTF-8 text".format(line_number),
                    payload={"line_number": line_number},
                )
            if not line or line.startswith("#"):
                continue
            if line.lower().startswith("algorithm,"):
                continue
            algorithm, instance_id, predicted = parse_record(line, line_number)
            try:
                dataset.add_instance(algorithm, instance_id, predicted)
            except ValidationError as exc:
                raise ValidationError(
                    "line {}: {}".format(line_number, exc.message),
                    payload={"line_number": line_number},
                )
    if len(dataset) == 0:
        raise ValidationError("{}: no instances".format(path))
    return dataset


def running_example():
    """
    The three-algorithm, five-instance example shipped with the package.
    """
    return ingest(RUNNING_EXAMPLE_FILE)
