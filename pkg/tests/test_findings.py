import json

from arithlat import findings, properties


def test_census_gap():
    rep = findings.census_gap_report(3)
    assert rep["consistent"]
    assert (rep["walk_count"], rep["verified_count"], rep["failure_count"]) == (25, 16, 9)
    assert rep["gap"] == 9
    assert rep["distinct_table_structures"] == 16
    assert all(row["structure_lifted"] for row in rep["table_rows"])
    # the fifth row repeats the first structure but prints a walk that does not lift
    fifth = rep["table_rows"][4]
    assert fifth["walk"] == [0, 2, 0] and not fifth["walk_lifts_to_r"]
    assert sum(not row["walk_lifts_to_r"] for row in rep["table_rows"]) == 1
    json.dumps(rep)


def test_ladder_count_bounds():
    rep = findings.ladder_count_bound_report((2, 3), 8)
    assert rep["consistent"]
    by_m = {e["m"]: e for e in rep["entries"]}
    assert by_m[2]["count"] == 35 and by_m[2]["upper"] == 1 and not by_m[2]["upper_holds"]
    assert by_m[3]["count"] == 276 and by_m[3]["upper"] == 4 and not by_m[3]["upper_holds"]
    assert all(e["lower_holds"] for e in rep["entries"])


def test_stabilization():
    rep = findings.stabilization_report(3, (8, 10))
    assert rep["consistent"] and rep["monotone"]
    assert rep["counts"] == [276, 318]
    assert not rep["stabilized"] and rep["steps"][0]["new_count"] == 42


def test_transfer_coverage():
    rep = findings.transfer_coverage_report(3, 8)
    assert rep["consistent"] and not rep["complete"]
    assert (rep["verified_count"], rep["oracle_count"]) == (25, 276)


def test_all_findings_kinds():
    kinds = [r["kind"] for r in findings.all_findings()]
    assert kinds == ["census-gap", "ladder-count-bounds", "bound-stabilization",
                     "transfer-coverage"]


def test_property_suites_small():
    assert properties.catalan_counts(8)["passed"]
    assert properties.neighbor_rule((3,), 6)["passed"]
    assert properties.m_matrix_suite((2,), 6)["passed"]
    assert properties.delta_suite((3,), 6)["passed"]
    assert properties.symmetry_propagation_suite((3,), 6)["passed"]
    assert properties.symmetric_census((2, 3), 6)["passed"]
    assert properties.construction_soundness(4, 3)["passed"]


def test_deviation_suite_reports_counterexamples():
    res = properties.deviation_cases((3,), 8)
    assert not res["passed"] and res["failures"] > 0
    example = res["counterexamples"][0]
    assert len(example["holding"]) != 1


def test_deviation_suite_split():
    res = properties.deviation_cases((3, 4), 8)
    assert res["checked"] == 2167
    assert (res["none_hold"], res["several_hold"]) == (24, 916)
