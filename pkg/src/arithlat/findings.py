"""Machine-readable reports for claims that do not reproduce as stated.

Each report is a plain dict carrying its configuration, the measured
numbers, and a ``consistent`` flag meaning the report agrees with itself
(e.g. walk count = lifted + failed). None of them asserts the claim under
test.
"""

from __future__ import annotations

from math import gcd
from typing import Optional, Sequence

from . import catalog
from .graphs import Graph
from .matrix import COLUMN_WISE
from .oracle import OracleConfig, oracle_enumerate
from .paths import catalan
from .transfer import build_state_space, build_transition_matrix, lift_walk, transfer_census
from .errors import FindingError


def census_gap_report(m: int = 3) -> dict:
    """Walks of the four-state system versus the structures they actually lift to."""
    ts = build_transition_matrix(build_state_space("paper-example"))
    census = transfer_census(ts, m)
    lifted = {s.r: s.d for s in census.lift_successes}
    report = {
        "kind": "census-gap",
        "config": {"states": "paper-example", "m": m},
        "walk_count": census.walk_count,
        "verified_count": census.verified_count,
        "failure_count": census.failure_count,
        "gap": census.walk_count - census.verified_count,
        "failed_walks": [list(w) for w, _ in census.lift_failures],
        "initial_states": list(census.initial_states),
        "terminal_states": list(census.terminal_states),
    }
    consistent = census.walk_count == len(census.success_walks) + census.failure_count
    if m == 3:
        rows = []
        for k, (seq, r, d) in enumerate(catalog.LADDER3_TABLE, 1):
            try:
                lifted_r = list(lift_walk([ts.states[i] for i in seq]).r)
            except FindingError:
                lifted_r = None
            rows.append({"row": k, "walk": list(seq), "r": list(r),
                         "structure_lifted": lifted.get(r) == d,
                         "walk_lifts_to_r": lifted_r == list(r),
                         "walk_lift": lifted_r})
        report["table_rows"] = rows
        report["distinct_table_structures"] = len({tuple(x["r"]) for x in rows})
        consistent = consistent and all(x["structure_lifted"] for x in rows)
    report["consistent"] = consistent
    return report


def ladder_count_bound_report(ms: Sequence[int] = (2, 3), bound: int = 8,
                              workers: Optional[int] = None) -> dict:
    """Oracle counts on P2 x Pm next to C(m-1) and C(m-1)^2."""
    entries = []
    consistent = True
    for m in ms:
        rep = oracle_enumerate(OracleConfig(Graph.ladder(m, COLUMN_WISE), bound), workers)
        symmetric = sum(1 for s in rep if s.is_row_symmetric())
        lower, upper = catalan(m - 1), catalan(m - 1) ** 2
        entries.append({"m": m, "count": rep.count, "symmetric_count": symmetric,
                        "lower": lower, "upper": upper,
                        "lower_holds": rep.count >= lower, "upper_holds": rep.count <= upper})
        consistent = consistent and symmetric <= rep.count and rep.count == len(rep.structures)
    return {"kind": "ladder-count-bounds", "config": {"entry_bound": bound, "ms": list(ms)},
            "entries": entries, "consistent": consistent}


def stabilization_report(m: int = 3, bounds: Sequence[int] = (8, 10),
                         workers: Optional[int] = None) -> dict:
    """Counts of Arith(P2 x Pm) at increasing entry bounds. Stability is evidence only."""
    graph = Graph.ladder(m, COLUMN_WISE)
    sets = [oracle_enumerate(OracleConfig(graph, b), workers).r_set() for b in bounds]
    counts = [len(s) for s in sets]
    steps = []
    consistent = True
    for (b0, s0), (b1, s1) in zip(zip(bounds, sets), zip(bounds[1:], sets[1:])):
        new = sorted(s1 - s0)
        # anything new must use an entry beyond the smaller bound
        consistent = consistent and s0 <= s1 and all(max(r) > b0 for r in new)
        steps.append({"from": b0, "to": b1, "new_count": len(new),
                      "stable": not new, "examples": [list(r) for r in new[:5]]})
    return {"kind": "bound-stabilization",
            "config": {"graph": graph.to_json(), "bounds": list(bounds)},
            "counts": counts, "monotone": all(a <= b for a, b in zip(counts, counts[1:])),
            "steps": steps, "stabilized": all(s["stable"] for s in steps),
            "consistent": consistent}


def transfer_coverage_report(m: int = 3, bound: int = 8,
                             workers: Optional[int] = None) -> dict:
    """How much of Arith(P2 x Pm) the C4 transfer system built from ``bound`` reaches."""
    ts = build_transition_matrix(build_state_space("from-c4", bound))
    census = transfer_census(ts, m)
    lifted = {s.r for s in census.lift_successes}
    oracle = oracle_enumerate(OracleConfig(Graph.ladder(m, COLUMN_WISE), bound), workers)
    primitive_cols = {s.r for s in oracle if all(gcd(*c) == 1 for c in s.columns())}
    missed = sorted(primitive_cols - lifted)
    return {"kind": "transfer-coverage",
            "config": {"m": m, "entry_bound": bound, "states": len(ts.states)},
            "walk_count": census.walk_count, "verified_count": census.verified_count,
            "oracle_count": oracle.count, "primitive_column_count": len(primitive_cols),
            "missed_examples": [list(r) for r in missed[:5]],
            "complete": lifted == oracle.r_set(),
            "consistent": lifted <= primitive_cols <= oracle.r_set()}


def all_findings(workers: Optional[int] = None) -> list[dict]:
    return [census_gap_report(3),
            ladder_count_bound_report((2, 3), 8, workers),
            stabilization_report(3, (8, 10), workers),
            transfer_coverage_report(3, 8, workers)]
