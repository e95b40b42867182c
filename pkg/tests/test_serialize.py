import json

import pytest

from arithlat import catalog
from arithlat.errors import DimensionError, DomainError
from arithlat.paths import enumerate_paths
from arithlat.serialize import (CSV_HEADER, emit, structure_from_csv_row, structure_to_csv_row,
                                structures_from_csv, structures_from_json, structures_to_csv,
                                structures_to_json)
from arithlat.structures import ArithStructure


def corpus():
    return (catalog.path4_structures() + catalog.stacked4_structures()
            + catalog.ladder3_table_structures() + list(enumerate_paths(1)))


def test_csv_row_format():
    s = catalog.ladder3_table_structures()[0]
    assert structure_to_csv_row(s) == ["ladder", "2", "3", "column-wise",
                                       "1;3;4;3;2;2|2;1;1;1;1;1"]
    p = catalog.path4_structures()[0]
    assert structure_to_csv_row(p)[2] == ""


def test_csv_round_trip():
    text = structures_to_csv(corpus())
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert structures_from_csv(text) == corpus()
    # comment lines are skipped
    assert structures_from_csv("# config\n" + text) == corpus()


def test_csv_errors():
    with pytest.raises(DomainError):
        structures_from_csv("no,header\n")
    with pytest.raises(DimensionError):
        structure_from_csv_row(["path", "3"])
    with pytest.raises(DomainError):
        structure_from_csv_row(["path", "3", "", "row-wise", "1;2;1"])


def test_json_round_trip_and_strings():
    objs = structures_to_json(corpus())
    text = json.dumps(objs)
    assert structures_from_json(json.loads(text)) == corpus()
    assert all(isinstance(x, str) for x in objs[0]["r"] + objs[0]["d"])
    single = objs[0]
    assert structures_from_json(single) == corpus()[:1]
    assert structures_from_json({"structures": objs}) == corpus()


def test_big_integers_survive():
    from arithlat.graphs import Graph
    big = 10 ** 25
    s = ArithStructure(Graph.path(2), (big, 1), (1, big))
    assert structures_from_json(structures_to_json([s])) == [s]
    assert structures_from_csv(structures_to_csv([s])) == [s]


def test_emit():
    structures = catalog.path4_structures()
    assert json.loads(emit(structures)) == structures_to_json(structures)
    assert emit(structures, "csv") == structures_to_csv(structures)
    with pytest.raises(ValueError):
        emit(structures, "xml")
