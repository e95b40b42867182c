"""Exhaustive property suites over oracle and path corpora.

Each suite returns a dict with ``name``, ``checked``, ``passed`` and up to a
handful of ``counterexamples``; the CLI ``properties`` command and the test
suite both consume them.
"""

from __future__ import annotations

from typing import Optional

from . import constructions as cons
from .graphs import Graph
from .matrix import COLUMN_WISE, ROW_WISE
from .oracle import OracleConfig, oracle_enumerate
from .paths import catalan, enumerate_paths
from .structures import classify_deviation, m_matrix_report, ones_not_adjacent

MAX_EXAMPLES = 5


def _result(name, checked, bad, config=None):
    return {"name": name, "config": config or {}, "checked": checked,
            "failures": len(bad), "passed": not bad,
            "counterexamples": bad[:MAX_EXAMPLES]}


def _ladder_corpus(ms, bound, workers=None):
    for m in ms:
        yield from oracle_enumerate(OracleConfig(Graph.ladder(m, COLUMN_WISE), bound), workers)


def catalan_counts(max_n: int = 10) -> dict:
    bad = []
    for n in range(2, max_n + 1):
        got = len(enumerate_paths(n))
        if got != catalan(n - 1):
            bad.append({"n": n, "count": got, "catalan": catalan(n - 1)})
    return _result("catalan-counts", max_n - 1, bad, {"max_n": max_n})


def deviation_cases(ms=(3, 4), bound: int = 8, workers=None) -> dict:
    """Every non-constant ladder structure satisfies exactly one of the three corner cases."""
    bad, checked, none_hold = [], 0, 0
    for s in _ladder_corpus(ms, bound, workers):
        if all(x == 1 for x in s.r):
            continue
        checked += 1
        case = classify_deviation(s)
        if len(case.holding) != 1:
            none_hold += not case.holding
            bad.append({"r": s.r_grid(), "d": s.d_grid(),
                        "corner_conditions": list(case.conditions),
                        "holding": list(case.holding)})
    out = _result("deviation-cases", checked, bad, {"ms": list(ms), "entry_bound": bound})
    out["none_hold"] = none_hold
    out["several_hold"] = len(bad) - none_hold
    return out


def neighbor_rule(ms=(3, 4), bound: int = 8, workers=None) -> dict:
    bad, checked = [], 0
    for s in _ladder_corpus(ms, bound, workers):
        checked += 1
        if not ones_not_adjacent(s):
            bad.append({"r": s.r_grid(), "d": s.d_grid()})
    return _result("ones-not-adjacent", checked, bad, {"ms": list(ms), "entry_bound": bound})


def m_matrix_suite(ms=(3,), bound: int = 8, workers=None) -> dict:
    bad, checked = [], 0
    for s in _ladder_corpus(ms, bound, workers):
        checked += 1
        rep = m_matrix_report(s.matrix)
        if not (rep.is_z_matrix and rep.is_irreducible and rep.determinant == 0
                and rep.min_proper_principal_minor > 0 and rep.is_almost_nonsingular_m):
            bad.append({"r": list(s.r), "report": rep.to_json()})
    return _result("m-matrix", checked, bad, {"ms": list(ms), "entry_bound": bound})


def delta_suite(ms=(3, 4), bound: int = 8, workers=None) -> dict:
    bad, checked = [], 0
    for s in _ladder_corpus(ms, bound, workers):
        checked += 1
        if not cons.delta_identity_check(s):
            bad.append({"r": s.r_grid()})
    return _result("delta-identity", checked, bad, {"ms": list(ms), "entry_bound": bound})


def symmetry_propagation_suite(ms=(3, 4), bound: int = 8, workers=None) -> dict:
    bad, checked, premise = [], 0, 0
    for s in _ladder_corpus(ms, bound, workers):
        checked += 1
        premise += cons.balanced_weights(s)
        if not cons.symmetry_propagates(s):
            bad.append({"r": s.r_grid(), "d": s.d_grid()})
    out = _result("symmetry-propagation", checked, bad, {"ms": list(ms), "entry_bound": bound})
    out["premise_count"] = premise
    return out


def symmetric_census(ms=(2, 3, 4), bound: int = 8, workers=None) -> dict:
    bad = []
    for m in ms:
        rep = oracle_enumerate(OracleConfig(Graph.ladder(m, ROW_WISE), bound), workers)
        found = {s.r for s in rep if s.is_row_symmetric()}
        image = {cons.stack_symmetric(p).r for p in enumerate_paths(m)}
        if found != image or len(found) != catalan(m - 1):
            bad.append({"m": m, "symmetric": len(found), "image": len(image),
                        "catalan": catalan(m - 1)})
    return _result("symmetric-census", len(ms), bad, {"ms": list(ms), "entry_bound": bound})


def construction_soundness(max_m: int = 6, max_grid_n: int = 4) -> dict:
    bad, checked = [], 0
    p2 = enumerate_paths(2).structures[0]
    for m in range(1, max_m + 1):
        for ps in enumerate_paths(m):
            outputs = [cons.stack_symmetric(ps), cons.kronecker_structure(p2, ps)]
            outputs += [cons.grid_column_constant(ps, n) for n in range(1, max_grid_n + 1)]
            for s in outputs:
                checked += 1
                if not s.verify():
                    bad.append({"graph": s.graph.label(), "r": list(s.r)})
    for n in range(1, 6):
        for m in range(1, 5):
            for x in enumerate_paths(n):
                for y in enumerate_paths(m):
                    s = cons.kronecker_structure(x, y)
                    checked += 1
                    if not s.verify():
                        bad.append({"graph": s.graph.label(), "r": list(s.r)})
    return _result("construction-soundness", checked, bad,
                   {"max_m": max_m, "max_grid_n": max_grid_n})


SUITES = {
    "catalan": catalan_counts,
    "deviation": deviation_cases,
    "neighbor": neighbor_rule,
    "m-matrix": m_matrix_suite,
    "delta": delta_suite,
    "symmetry": symmetry_propagation_suite,
    "symmetric-census": symmetric_census,
    "constructions": construction_soundness,
}


def run_suites(names=None, workers: Optional[int] = None) -> list[dict]:
    names = list(SUITES) if not names else names
    out = []
    for name in names:
        fn = SUITES[name]
        if name in ("catalan", "constructions"):
            out.append(fn())
        else:
            out.append(fn(workers=workers))
    return out
