"""
Test reading predicted-rank files into an EvalDataset.
"""

import pytest

from sampledeval.framework.dataset import EvalDataset, ingest, parse_record
from sampledeval.framework.exceptions import ValidationError
from sampledeval.framework.metrics import PredictedRanks
from sampledeval.framework.reference_tables import (
    RUNNING_EXAMPLE_N,
    RUNNING_EXAMPLE_RANKS,
)


def write_lines(tmp_path, lines):
    path = tmp_path / "input.csv"
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_running_example(example_dataset):
    assert example_dataset.algorithms == ["A", "B", "C"]
    assert len(example_dataset) == 15
    for algorithm in example_dataset.algorithms:
        instances = example_dataset.instances(algorithm)
        assert len(instances) == 5
        assert all(predicted.n == 10000 for _, predicted in instances)
    assert example_dataset.all_single_relevant()
    _, predicted = example_dataset.instances("C")[1]
    assert predicted.ranks == (2,)


def test_data_file_matches_reference_ranks(example_dataset):
    reference = EvalDataset.from_ranks(RUNNING_EXAMPLE_RANKS, RUNNING_EXAMPLE_N)
    assert example_dataset.algorithms == reference.algorithms
    for algorithm in reference.algorithms:
        assert [p for _, p in example_dataset.instances(algorithm)] == [
            p for _, p in reference.instances(algorithm)
        ]


def test_ingest_round_trips_fixture_file(example_file, example_dataset):
    dataset = ingest(example_file)
    assert dataset.algorithms == example_dataset.algorithms
    assert dataset.instances("B") == example_dataset.instances("B")


def test_parse_multi_relevant_record():
    algorithm, instance_id, predicted = parse_record("P,u7,50,9; 1 ;4", 3)
    assert (algorithm, instance_id) == ("P", "u7")
    assert predicted == PredictedRanks(50, (1, 4, 9))


def test_comments_and_blank_lines_skipped(tmp_path):
    path = write_lines(
        tmp_path, ["# comment", "", "algorithm,instance_id,n,ranks", "A,x1,10,3"]
    )
    dataset = ingest(path)
    assert len(dataset) == 1


@pytest.mark.parametrize(
    "line",
    [
        "A,x1,10",
        "A,x1,ten,3",
        "A,x1,10,3;x",
        "A,x1,10,11",
        "A,x1,10,0",
        "A,x1,10,2;2",
        ",x1,10,2",
    ],
)
def test_malformed_line_reports_line_number(tmp_path, line):
    path = write_lines(tmp_path, ["A,x0,10,1", line])
    with pytest.raises(ValidationError) as excinfo:
        ingest(path)
    assert "line 2" in excinfo.value.message
    assert excinfo.value.payload["line_number"] == 2
    assert excinfo.value.exit_code == 1
    assert excinfo.value.to_dict()["status"] == "error"


def test_undecodable_line_reports_line_number(tmp_path):
    path = tmp_path / "input.csv"
    path.write_bytes(b"A,x0,10,1\nA,x1,10,\xff\xfe\n")
    with pytest.raises(ValidationError) as excinfo:
        ingest(str(path))
    assert "line 2" in excinfo.value.message
    assert excinfo.value.payload["line_number"] == 2


def test_byte_order_mark_is_ignored(tmp_path):
    path = tmp_path / "input.csv"
    path.write_bytes(b"\xef\xbb\xbfalgorithm,instance_id,n,ranks\nA,x1,10,3\n")
    dataset = ingest(str(path))
    assert dataset.algorithms == ["A"]


def test_duplicate_instance_rejected(tmp_path):
    path = write_lines(tmp_path, ["A,x1,10,1", "A,x1,10,2"])
    with pytest.raises(ValidationError) as excinfo:
        ingest(path)
    assert excinfo.value.payload["line_number"] == 2


def test_empty_or_missing_file_rejected(tmp_path):
    with pytest.raises(ValidationError):
        ingest(write_lines(tmp_path, ["# nothing here"]))
    with pytest.raises(ValidationError):
        ingest(str(tmp_path / "missing.csv"))


def test_dataset_checks(multi_relevant_dataset):
    assert not multi_relevant_dataset.all_single_relevant()
    assert not multi_relevant_dataset.all_single_relevant("Q")
    with pytest.raises(ValidationError):
        multi_relevant_dataset.instances("R")
    with pytest.raises(ValidationError):
        EvalDataset().validate()
    with pytest.raises(ValidationError):
        multi_relevant_dataset.add_instance("P", "u3", [1, 2])
