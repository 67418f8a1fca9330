import numpy as np
import pandas as pd
import pytest

from pipeline_evolution.experiment import encode_labels, load_csv
from pipeline_evolution.experiment.exceptions import CsvParseError, SchemaError


def test_string_labels(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text("a,b,diagnosis\n1,2.5,b\n3,4,m\n5,6,b\n")

    ds = load_csv(path, label_column="diagnosis")

    assert ds.feature_names == ("a", "b")
    assert ds.labels.tolist() == [0, 1, 0]
    assert ds.class_names == ("b", "m")
    assert ds.class_count == 2
    np.testing.assert_array_equal(ds.rows, [[1, 2.5], [3, 4], [5, 6]])


def test_blank_lines_ignored(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text("x,class\n1,0\n\n2,1\n\n")

    ds = load_csv(path)

    assert ds.labels.tolist() == [0, 1]
    assert ds.class_names is None


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("x,y,class\n1,2,0\n3,oops,1\n", 3, "y"),
        ("x,class\n1,0\n2,\n", 3, "class"),
    ],
)
def test_parse_error_location(tmp_path, text, line, column):
    path = tmp_path / "bad.csv"
    path.write_text(text)

    with pytest.raises(CsvParseError, match=f"at line {line}, column '{column}'") as exc_info:
        load_csv(path)

    assert exc_info.value.row == line
    assert exc_info.value.column == column


def test_unreadable(tmp_path):
    with pytest.raises(CsvParseError, match="Cannot parse"):
        load_csv(tmp_path / "missing.csv")

    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(CsvParseError):
        load_csv(empty)


def test_missing_label_column(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text("x,y\n1,0\n")
    with pytest.raises(SchemaError, match="'class' not found"):
        load_csv(path)


def test_single_class(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text("x,class\n1,0\n2,0\n")
    with pytest.raises(SchemaError, match="at least two classes"):
        load_csv(path)


@pytest.mark.parametrize(
    "labels, codes, names",
    [
        ([0, 1, 2, 1], [0, 1, 2, 1], None),
        ([1, 2, 1], [0, 1, 0], ("1", "2")),
        (["y", "x", "y", "z"], [0, 1, 0, 2], ("y", "x", "z")),
    ],
)
def test_encode_labels(labels, codes, names):
    actual_codes, actual_names = encode_labels(pd.Series(labels))
    assert actual_codes.tolist() == codes
    assert actual_names == names
