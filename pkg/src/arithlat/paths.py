"""Complete enumeration of arithmetical structures on paths.

Any non-constant structure on Pn has an interior vertex with d = 1, i.e. an
r value equal to the sum of its two neighbours; deleting it ("smoothing")
gives a structure on P(n-1). Running this backwards, Arith(Pn) is the
all-ones vector together with every way of inserting r_i + r_(i+1) between
two adjacent entries of a member of Arith(P(n-1)). The count is Catalan(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import FindingError, SizeCapError
from .graphs import Graph
from .structures import ArithStructure, compute_d_from_r, verify

MAX_PATH_N = 14


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan needs k >= 0")
    return comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class PathStructureSet:
    n: int
    structures: tuple[ArithStructure, ...]

    def __len__(self):
        return len(self.structures)

    def __iter__(self):
        return iter(self.structures)

    def r_set(self) -> set[tuple[int, ...]]:
        return {s.r for s in self.structures}


def subdivisions(r: tuple[int, ...]):
    """Every vector obtained by inserting r_i + r_(i+1) between r_i and r_(i+1)."""
    for i in range(len(r) - 1):
        yield r[:i + 1] + (r[i] + r[i + 1],) + r[i + 1:]


def smooth(r: tuple[int, ...]):
    """Remove one interior entry equal to the sum of its neighbours, if any."""
    for i in range(1, len(r) - 1):
        if r[i] == r[i - 1] + r[i + 1]:
            return r[:i] + r[i + 1:]
    return None


def path_r_vectors(n: int, check: bool = True) -> list[tuple[int, ...]]:
    """Sorted r-vectors of Arith(Pn) by subdivision closure.

    With ``check`` every inserted vector is re-verified on P(level) as it is
    produced.
    """
    if n < 1:
        raise ValueError("path needs n >= 1")
    if n > MAX_PATH_N:
        raise SizeCapError(f"path enumeration capped at n = {MAX_PATH_N}")
    level = {(1,)}
    for k in range(2, n + 1):
        nxt = {(1,) * k}
        graph = Graph.path(k)
        for r in level:
            for child in subdivisions(r):
                if check and child not in nxt:
                    result = verify(graph, compute_d_from_r(graph, child), child)
                    if not result:
                        raise FindingError(f"subdivision of {r} failed: {result.message}")
                nxt.add(child)
        level = nxt
    return sorted(level)


def enumerate_paths(n: int, check: bool = True) -> PathStructureSet:
    graph = Graph.path(n)
    rs = path_r_vectors(n, check)
    structures = tuple(ArithStructure(graph, compute_d_from_r(graph, r), r) for r in rs)
    if len(structures) != catalan(n - 1):
        raise FindingError(f"|Arith(P{n})| = {len(structures)} != Catalan({n - 1})")
    return PathStructureSet(n, structures)
