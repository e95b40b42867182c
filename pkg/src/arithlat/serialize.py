"""JSON and CSV encodings.

Integers that can grow (d, r entries, counts) travel as decimal strings in
JSON so consumers with 64-bit integers never overflow. The CSV row format is::

    family,n,m,ordering,d|r

where the final cell holds the ';'-separated d entries, a '|', then the
';'-separated r entries.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .errors import DimensionError, DomainError
from .graphs import Graph
from .structures import ArithStructure
from .validation import parse_int_list

CSV_HEADER = ("family", "n", "m", "ordering", "d|r")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def structure_to_csv_row(s: ArithStructure) -> list[str]:
    g = s.graph
    cell = ";".join(map(str, s.d)) + "|" + ";".join(map(str, s.r))
    return [g.family, str(g.n), "" if g.m is None else str(g.m), g.ordering, cell]


def structure_from_csv_row(row: list[str]) -> ArithStructure:
    if len(row) != len(CSV_HEADER):
        raise DimensionError(f"CSV row needs {len(CSV_HEADER)} cells, got {len(row)}")
    family, n, m, ordering, cell = row
    if cell.count("|") != 1:
        raise DomainError("d|r cell must contain exactly one '|'")
    d_text, r_text = cell.split("|")
    graph = Graph.from_json({"family": family, "n": int(n),
                             "m": int(m) if m else None, "ordering": ordering})
    return ArithStructure(graph, parse_int_list(d_text, "d"), parse_int_list(r_text, "r"))


def structures_to_csv(structures: Iterable[ArithStructure]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in structures:
        writer.writerow(structure_to_csv_row(s))
    return buf.getvalue()


def structures_from_csv(text: str) -> list[ArithStructure]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    rows = list(csv.reader(lines))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise DomainError("missing CSV header")
    return [structure_from_csv_row(r) for r in rows[1:] if r]


def structures_to_json(structures: Iterable[ArithStructure]) -> list[dict]:
    return [s.to_json() for s in structures]


def structures_from_json(obj) -> list[ArithStructure]:
    if isinstance(obj, dict):
        if "structures" in obj:
            obj = obj["structures"]
        else:
            obj = [obj]
    return [ArithStructure.from_json(o) for o in obj]


def emit(report, fmt: str = "json") -> str:
    """Encode a report (dict, list of structures, or object with ``to_json``)."""
    if fmt == "csv":
        if isinstance(report, dict):
            structures = structures_from_json(report.get("structures", []))
        else:
            structures = list(report)
        return structures_to_csv(structures)
    if fmt != "json":
        raise ValueError(f"unknown format {fmt!r}")
    if hasattr(report, "to_json"):
        report = report.to_json()
    elif not isinstance(report, dict):
        report = structures_to_json(report)
    return dumps(report)
