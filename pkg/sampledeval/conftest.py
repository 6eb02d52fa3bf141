import pytest

from sampledeval.framework.dataset import EvalDataset, running_example
from sampledeval.framework.metrics import PredictedRanks


@pytest.fixture
def example_dataset():
    """
    Three algorithms, five instances each, one relevant item, n = 10000.
    """
    return running_example()


@pytest.fixture
def example_file(tmp_path):
    """
    The running example written to a temporary csv file.
    """
    path = tmp_path / "ranks.csv"
    lines = ["algorithm,instance_id,n,ranks"]
    dataset = running_example()
    for algorithm in dataset.algorithms:
        for instance_id, predicted in dataset.instances(algorithm):
            lines.append(
                "{},{},{},{}".format(
                    algorithm,
                    instance_id,
                    predicted.n,
                    ";".join(str(r) for r in predicted.ranks),
                )
            )
    path.write_text("\n".join(lines) + "\n")
    return str(path)


@pytest.fixture
def multi_relevant_dataset():
    """
    Small catalog, several relevant items per instance.
    """
    dataset = EvalDataset()
    dataset.add_instance("P", "u1", PredictedRanks(50, (1, 4, 9)))
    dataset.add_instance("P", "u2", PredictedRanks(50, (2, 30)))
    dataset.add_instance("Q", "u1", PredictedRanks(50, (10, 20, 40)))
    dataset.add_instance("Q", "u2", PredictedRanks(50, (5, 6)))
    return dataset
