"""Bounded brute-force enumeration of arithmetical structures.

This is the independent ground truth for every other enumerator in the
package: it knows nothing but the vertex equations. r values are assigned
vertex by vertex (column by column on product graphs) and a branch is cut
as soon as some vertex has its whole closed neighbourhood assigned and
r_v does not divide its neighbour sum. Primitivity is filtered at the leaves.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional

from .errors import FamilyError, SizeCapError
from .graphs import Graph
from .matrix import COLUMN_WISE
from .structures import ArithStructure, compute_d_from_r

SEARCH_SPACE_CAP = 10 ** 9


@dataclass(frozen=True)
class OracleConfig:
    graph: Graph
    entry_bound: int
    dedup: bool = True

    def __post_init__(self):
        if self.entry_bound < 1:
            raise ValueError("entry_bound must be >= 1")

    @property
    def search_space(self) -> int:
        return self.entry_bound ** self.graph.num_vertices

    def check_cap(self):
        if self.search_space > SEARCH_SPACE_CAP:
            raise SizeCapError(
                f"search space {self.entry_bound}^{self.graph.num_vertices} exceeds {SEARCH_SPACE_CAP}")

    def to_json(self) -> dict:
        return {"graph": self.graph.to_json(), "entry_bound": self.entry_bound,
                "dedup": self.dedup}


@dataclass(frozen=True)
class EnumerationReport:
    structures: tuple[ArithStructure, ...]
    config: OracleConfig
    complete_within_bound: bool = True

    @property
    def count(self) -> int:
        return len(self.structures)

    def __len__(self):
        return len(self.structures)

    def __iter__(self):
        return iter(self.structures)

    def r_set(self) -> set[tuple[int, ...]]:
        return {s.r for s in self.structures}

    def to_json(self) -> dict:
        return {"config": self.config.to_json(), "count": str(self.count),
                "complete_within_bound": self.complete_within_bound,
                "structures": [s.to_json() for s in self.structures]}


def assignment_order(graph: Graph) -> list[int]:
    """Vertex indices in the order the search assigns them."""
    if graph.family in ("ladder", "grid"):
        col = graph.with_ordering(COLUMN_WISE)
        return [graph.index(*col.coord(k)) for k in range(graph.num_vertices)]
    return list(range(graph.num_vertices))


def _plan(graph: Graph):
    order = assignment_order(graph)
    pos = {v: t for t, v in enumerate(order)}
    nbrs = graph.neighbors()
    checks = [[] for _ in order]
    for u in range(graph.num_vertices):
        done = max([pos[u]] + [pos[w] for w in nbrs[u]])
        checks[done].append((u, nbrs[u]))
    return order, checks


def _search(graph: Graph, bound: int, first_values) -> list[tuple[int, ...]]:
    order, checks = _plan(graph)
    n = len(order)
    r = [0] * graph.num_vertices
    found = []

    def rec(t, values):
        w = order[t]
        check = checks[t]
        for val in values:
            r[w] = val
            ok = True
            for u, nb in check:
                s = 0
                for x in nb:
                    s += r[x]
                if s % r[u]:
                    ok = False
                    break
            if not ok:
                continue
            if t == n - 1:
                if reduce(gcd, r) == 1:
                    found.append(tuple(r))
            else:
                rec(t + 1, range(1, bound + 1))
        r[w] = 0

    rec(0, first_values)
    return found


def _search_branch(args):
    graph, bound, value = args
    return _search(graph, bound, (value,))


def default_workers() -> int:
    env = os.environ.get("ARITHLAT_THREADS")
    if env:
        return max(1, int(env))
    return 1


def oracle_enumerate(config: OracleConfig, workers: Optional[int] = None) -> EnumerationReport:
    config.check_cap()
    graph, bound = config.graph, config.entry_bound
    workers = default_workers() if workers is None else workers
    if workers > 1 and bound > 1:
        with ProcessPoolExecutor(max_workers=min(workers, bound)) as pool:
            parts = pool.map(_search_branch, [(graph, bound, v) for v in range(1, bound + 1)])
            rs = [r for part in parts for r in part]
    else:
        rs = _search(graph, bound, range(1, bound + 1))
    if config.dedup:
        rs = set(rs)
    structures = tuple(ArithStructure(graph, compute_d_from_r(graph, r), r) for r in sorted(rs))
    return EnumerationReport(structures, config, True)


def oracle_count_symmetric(config: OracleConfig, workers: Optional[int] = None) -> int:
    if config.graph.family != "ladder":
        raise FamilyError("symmetric count is defined for ladders")
    return sum(1 for s in oracle_enumerate(config, workers) if s.is_row_symmetric())
