import pytest

from arithlat.errors import FamilyError, SizeCapError
from arithlat.graphs import Graph
from arithlat.matrix import COLUMN_WISE, ROW_WISE
from arithlat.oracle import (OracleConfig, assignment_order, oracle_count_symmetric,
                             oracle_enumerate)
from arithlat.paths import catalan, enumerate_paths

import naive


@pytest.mark.parametrize("n,bound", [(2, 5), (3, 6), (4, 6), (5, 7)])
def test_path_oracle_matches_brute_force(n, bound):
    rep = oracle_enumerate(OracleConfig(Graph.path(n), bound))
    assert rep.r_set() == set(naive.brute_force(naive.path_neighbors(n), bound))


def test_cycle_oracle_matches_brute_force():
    for n, bound in [(3, 6), (4, 6), (5, 5)]:
        rep = oracle_enumerate(OracleConfig(Graph.cycle(n), bound))
        assert rep.r_set() == set(naive.brute_force(naive.cycle_neighbors(n), bound))


@pytest.mark.parametrize("ordering", [ROW_WISE, COLUMN_WISE])
def test_ladder_oracle_matches_brute_force(ordering):
    g = Graph.ladder(3, ordering)
    nbrs = naive.grid_neighbors(2, 3, column_wise=ordering == COLUMN_WISE)
    assert oracle_enumerate(OracleConfig(g, 5)).r_set() == set(naive.brute_force(nbrs, 5))


def test_grid_oracle_matches_brute_force():
    nbrs = naive.grid_neighbors(3, 3, column_wise=True)
    g = Graph.grid(3, 3, COLUMN_WISE)
    assert oracle_enumerate(OracleConfig(g, 3)).r_set() == set(naive.brute_force(nbrs, 3))


@pytest.mark.parametrize("n", range(2, 8))
def test_path_oracle_is_bounded_catalan_set(n):
    # P7 has two structures with an entry above 12, so compare against the bounded subset
    bounded = {r for r in enumerate_paths(n).r_set() if max(r) <= 12}
    assert oracle_enumerate(OracleConfig(Graph.path(n), 12)).r_set() == bounded


def test_path7_bound12_misses_two():
    assert oracle_enumerate(OracleConfig(Graph.path(7), 12)).count == 130


def test_ladder_counts():
    assert oracle_enumerate(OracleConfig(Graph.cycle(4), 8)).count == 35
    assert oracle_enumerate(OracleConfig(Graph.ladder(2), 8)).count == 35
    assert oracle_enumerate(OracleConfig(Graph.ladder(2), 12)).count == 35
    assert oracle_enumerate(OracleConfig(Graph.ladder(3), 8)).count == 276


@pytest.mark.parametrize("m", [2, 3, 4])
def test_symmetric_counts(m):
    assert oracle_count_symmetric(OracleConfig(Graph.ladder(m), 8)) == catalan(m - 1)


def test_row_and_column_orderings_agree():
    a = oracle_enumerate(OracleConfig(Graph.ladder(3, ROW_WISE), 6))
    b = oracle_enumerate(OracleConfig(Graph.ladder(3, COLUMN_WISE), 6))
    assert {s.with_ordering(COLUMN_WISE).r for s in a} == b.r_set()


def test_workers_give_same_result(monkeypatch):
    cfg = OracleConfig(Graph.ladder(3), 6)
    serial = oracle_enumerate(cfg, workers=1)
    assert oracle_enumerate(cfg, workers=3).r_set() == serial.r_set()
    monkeypatch.setenv("ARITHLAT_THREADS", "2")
    assert oracle_enumerate(cfg).r_set() == serial.r_set()


def test_every_result_verifies():
    for s in oracle_enumerate(OracleConfig(Graph.ladder(3), 6)):
        assert s.verify()


def test_assignment_order_is_column_wise():
    g = Graph.ladder(3, ROW_WISE)
    order = assignment_order(g)
    assert [g.coord(v) for v in order] == [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (2, 3)]


def test_caps_and_family_errors():
    with pytest.raises(SizeCapError):
        oracle_enumerate(OracleConfig(Graph.grid(4, 4), 8))
    with pytest.raises(FamilyError):
        oracle_count_symmetric(OracleConfig(Graph.path(3), 4))
    with pytest.raises(ValueError):
        OracleConfig(Graph.path(3), 0)


def test_report_json():
    rep = oracle_enumerate(OracleConfig(Graph.path(3), 4))
    obj = rep.to_json()
    assert obj["count"] == "2"
    assert obj["config"]["entry_bound"] == 4
