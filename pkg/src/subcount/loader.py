"""Load permutation groups from JSON generator files.

Expected shape::

    {"name": "S3", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}

Generators are 0-indexed image arrays.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import FormatError
from .group import DEFAULT_ORDER_CAP, Group, group_from_generators


def load_group_file(path, order_cap: int = DEFAULT_ORDER_CAP) -> Group:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: expected an object at top level")
    missing = {"degree", "generators", "name"} - data.keys()
    if missing:
        raise FormatError(f"{path}: missing field(s) {sorted(missing)}")
    degree, gens, name = data["degree"], data["generators"], data["name"]
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 0:
        raise FormatError(f"{path}: degree must be a non-negative integer")
    if not isinstance(name, str):
        raise FormatError(f"{path}: name must be a string")
    if not isinstance(gens, list) or not all(
        isinstance(g, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in g) for g in gens
    ):
        raise FormatError(f"{path}: generators must be a list of integer lists")
    group = group_from_generators(degree, gens, name, order_cap=order_cap)
    group.meta["source"] = str(path)
    return group


def dump_group_file(path, name: str, degree: int, generators) -> None:
    Path(path).write_text(json.dumps({"name": name, "degree": degree,
                                      "generators": [list(g) for g in generators]}, indent=2))
