import json

import pytest

from subcount.errors import FormatError, InvalidPermutation, OrderCapExceeded
from subcount.invariants import cyc_by_enumeration
from subcount.loader import dump_group_file, load_group_file


def test_round_trip(tmp_path):
    path = tmp_path / "a4.json"
    dump_group_file(path, "A4", 4, [[1, 2, 0, 3], [1, 0, 3, 2]])
    g = load_group_file(path)
    assert g.name == "A4" and g.order == 12 and cyc_by_enumeration(g) == 8
    assert g.meta["source"] == str(path)


@pytest.mark.parametrize("payload", [
    "not json",
    json.dumps([1, 2]),
    json.dumps({"degree": 3, "name": "x"}),
    json.dumps({"degree": "3", "name": "x", "generators": []}),
    json.dumps({"degree": 3, "name": 5, "generators": []}),
    json.dumps({"degree": 3, "name": "x", "generators": [[0, 1, "2"]]}),
])
def test_format_errors(tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload)
    with pytest.raises(FormatError):
        load_group_file(path)


def test_missing_file(tmp_path):
    with pytest.raises(FormatError):
        load_group_file(tmp_path / "nope.json")


def test_invalid_permutation_and_cap(tmp_path):
    path = tmp_path / "p.json"
    dump_group_file(path, "bad", 3, [[0, 0, 1]])
    with pytest.raises(InvalidPermutation):
        load_group_file(path)
    dump_group_file(path, "S6", 6, [[1, 2, 3, 4, 5, 0], [1, 0, 2, 3, 4, 5]])
    with pytest.raises(OrderCapExceeded):
        load_group_file(path, order_cap=100)
