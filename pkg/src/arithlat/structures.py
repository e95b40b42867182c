"""Arithmetical structures: the (d, r) pair, verification and M-matrix checks.

A pair of positive integer vectors (d, r) is an arithmetical structure on a
graph with adjacency A when gcd(r) = 1 and (diag(d) - A) r = 0, i.e. every
vertex satisfies d_v r_v = sum of r_u over neighbours u of v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from .errors import (DimensionError, DivisibilityError, FamilyError, PrimitivityError,
                     SizeCapError)
from .graphs import Graph, permute_structure
from .matrix import ExactMatrix, determinant, reorder_permutation
from .validation import as_int_vector, check_nonnegative, check_positive

MAX_MINOR_DIM = 14


def is_primitive(r: Sequence[int]) -> bool:
    r = as_int_vector(r, "r")
    if not r:
        raise DimensionError("is_primitive needs a nonempty vector")
    return reduce(gcd, r) == 1


def neighbor_sums(graph: Graph, r: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(r[u] for u in nb) for nb in graph.neighbors())


def compute_d_from_r(graph: Graph, r: Sequence[int]) -> tuple[int, ...]:
    """The unique d paired with r, or DivisibilityError naming every failing vertex."""
    r = check_positive(as_int_vector(r, "r", graph.num_vertices), "r")
    sums = neighbor_sums(graph, r)
    bad = [v for v, (s, x) in enumerate(zip(sums, r)) if s % x]
    if bad:
        raise DivisibilityError(bad)
    return tuple(s // x for s, x in zip(sums, r))


@dataclass(frozen=True)
class Verification:
    """Outcome of :func:`verify`. Truthy iff every invariant holds."""

    passed: bool
    invariant: Optional[str] = None   # "equation" | "primitivity" | None
    vertex: Optional[int] = None      # first failing vertex (0-based)
    residual: Optional[int] = None
    message: str = "ok"

    def __bool__(self):
        return self.passed


def verify(graph: Graph, d: Sequence[int], r: Sequence[int]) -> Verification:
    """Check (diag(d) - A) r = 0 and primitivity.

    Malformed input raises (DimensionError, DomainError); a well-formed pair
    that fails the mathematics returns a failing :class:`Verification`.
    """
    n = graph.num_vertices
    d = check_nonnegative(as_int_vector(d, "d", n), "d")
    r = check_positive(as_int_vector(r, "r", n), "r")
    for v, (s, dv, rv) in enumerate(zip(neighbor_sums(graph, r), d, r)):
        if dv * rv != s:
            i, j = graph.coord(v)
            return Verification(False, "equation", v, dv * rv - s,
                                f"vertex {v} ({i},{j}): d*r = {dv * rv} but neighbour sum = {s}")
    if reduce(gcd, r) != 1:
        return Verification(False, "primitivity", None, None,
                            f"gcd(r) = {reduce(gcd, r)}")
    return Verification(True)


@dataclass(frozen=True)
class ArithStructure:
    graph: Graph
    d: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        n = self.graph.num_vertices
        object.__setattr__(self, "d", as_int_vector(self.d, "d", n))
        object.__setattr__(self, "r", as_int_vector(self.r, "r", n))

    @classmethod
    def from_r(cls, graph: Graph, r: Sequence[int]) -> "ArithStructure":
        """Pair r with its forced d; raises DivisibilityError / PrimitivityError."""
        r = as_int_vector(r, "r", graph.num_vertices)
        d = compute_d_from_r(graph, r)
        if reduce(gcd, r) != 1:
            raise PrimitivityError(f"gcd(r) = {reduce(gcd, r)}")
        return cls(graph, d, r)

    def verify(self) -> Verification:
        return verify(self.graph, self.d, self.r)

    @property
    def is_primitive(self) -> bool:
        return is_primitive(self.r)

    @property
    def matrix(self) -> ExactMatrix:
        """diag(d) - A."""
        return ExactMatrix.diag(self.d) - self.graph.adjacency

    def at(self, i: int, j: int) -> tuple[int, int]:
        """(d, r) at 1-based coordinate (i, j)."""
        v = self.graph.index(i, j)
        return self.d[v], self.r[v]

    def r_grid(self) -> list[list[int]]:
        """r arranged as rows x cols, independent of the vertex ordering."""
        g = self.graph
        return [[self.r[g.index(i, j)] for j in range(1, g.cols + 1)]
                for i in range(1, g.rows + 1)]

    def d_grid(self) -> list[list[int]]:
        g = self.graph
        return [[self.d[g.index(i, j)] for j in range(1, g.cols + 1)]
                for i in range(1, g.rows + 1)]

    def columns(self) -> list[tuple[int, ...]]:
        """Column states (r_{1,j}, ..., r_{n,j}) for j = 1..m."""
        return [tuple(c) for c in zip(*self.r_grid())]

    def is_row_symmetric(self) -> bool:
        """All rows of r coincide (for ladders: r(1,i) = r(2,i))."""
        rows = self.r_grid()
        return all(row == rows[0] for row in rows)

    def with_ordering(self, ordering: str) -> "ArithStructure":
        if self.graph.family not in ("ladder", "grid"):
            raise FamilyError("only product graphs carry an ordering")
        target = self.graph.with_ordering(ordering)
        perm = reorder_permutation(self.graph.vertex_ordering, target.vertex_ordering)
        _, d, r = permute_structure(self.graph.adjacency, self.d, self.r, perm)
        return ArithStructure(target, d, r)

    def key(self) -> tuple:
        return (self.graph, self.r)

    def to_json(self) -> dict:
        return {"graph": self.graph.to_json(),
                "d": [str(x) for x in self.d],
                "r": [str(x) for x in self.r]}

    @classmethod
    def from_json(cls, obj: dict) -> "ArithStructure":
        graph = Graph.from_json(obj["graph"])
        n = graph.num_vertices
        return cls(graph, as_int_vector(obj["d"], "d", n), as_int_vector(obj["r"], "r", n))


def laplacian_structure(graph: Graph) -> ArithStructure:
    return ArithStructure(graph, graph.degrees(), (1,) * graph.num_vertices)


# -- M-matrix predicates -------------------------------------------------------

def is_z_matrix(m: ExactMatrix) -> bool:
    n = m.dim
    return all(m.rows[i][j] <= 0 for i in range(n) for j in range(n) if i != j)


def is_irreducible(m: ExactMatrix) -> bool:
    """Strong connectivity of the digraph with an arc i -> j whenever m[i, j] != 0, i != j."""
    n = m.dim
    if n == 1:
        return True
    out = [[j for j in range(n) if j != i and m.rows[i][j]] for i in range(n)]
    inn = [[i for i in range(n) if i != j and m.rows[i][j]] for j in range(n)]

    def reaches_all(adj):
        seen = {0}
        stack = [0]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == n

    return reaches_all(out) and reaches_all(inn)


def proper_principal_minors(m: ExactMatrix):
    """Yield (index-subset, minor) over every nonempty proper subset."""
    n = m.dim
    if n > MAX_MINOR_DIM:
        raise SizeCapError(f"principal-minor enumeration capped at dim {MAX_MINOR_DIM}, got {n}")
    for size in range(1, n):
        for idx in combinations(range(n), size):
            yield idx, determinant(m.submatrix(idx))


@dataclass(frozen=True)
class MMatrixReport:
    is_z_matrix: bool
    is_irreducible: bool
    determinant: int
    min_proper_principal_minor: Optional[int]
    is_almost_nonsingular_m: bool
    argmin_minor: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {"is_z_matrix": self.is_z_matrix, "is_irreducible": self.is_irreducible,
                "determinant": str(self.determinant),
                "min_proper_principal_minor": (None if self.min_proper_principal_minor is None
                                               else str(self.min_proper_principal_minor)),
                "is_almost_nonsingular_m": self.is_almost_nonsingular_m}


def m_matrix_report(m: ExactMatrix) -> MMatrixReport:
    n = m.dim
    if n > MAX_MINOR_DIM:
        raise SizeCapError(f"principal-minor enumeration capped at dim {MAX_MINOR_DIM}, got {n}")
    z = is_z_matrix(m)
    det = determinant(m)
    lowest, where = None, None
    for idx, minor in proper_principal_minors(m):
        if lowest is None or minor < lowest:
            lowest, where = minor, idx
    minors_ok = lowest is None or lowest > 0
    return MMatrixReport(z, is_irreducible(m), det, lowest, z and minors_ok and det >= 0, where)


# -- degree-deviation classifier for ladders ----------------------------------

@dataclass(frozen=True)
class DeviationCase:
    """Which of the three corner cases apply to a non-constant ladder structure.

    ``conditions`` lists the cases whose corner condition holds at (1,1)/(2,1);
    ``holding`` those whose full statement (corner condition and witness
    vertex outside the first column pair) holds. ``has_low``/``has_high`` report
    whether a vertex other than (1,1), (2,1) has d < 2 / d > 2.
    """

    conditions: tuple[int, ...]
    holding: tuple[int, ...]
    has_low: bool
    has_high: bool
    neighbor_rule: bool

    @property
    def case(self) -> Optional[int]:
        return self.holding[0] if len(self.holding) == 1 else None


def ones_not_adjacent(s: ArithStructure) -> bool:
    """No two adjacent vertices both carry d = 1."""
    nbrs = s.graph.neighbors()
    return not any(s.d[v] == 1 and any(s.d[u] == 1 for u in nbrs[v]) for v in range(len(s.d)))


def classify_deviation(s: ArithStructure) -> DeviationCase:
    if s.graph.family != "ladder":
        raise FamilyError("deviation cases are stated for ladders")
    if all(x == 1 for x in s.r):
        raise ValueError("the Laplacian structure has no deviation case")
    d11, _ = s.at(1, 1)
    d21, _ = s.at(2, 1)
    corner = {s.graph.index(1, 1), s.graph.index(2, 1)}
    rest = [dv for v, dv in enumerate(s.d) if v not in corner]
    has_low = any(dv < 2 for dv in rest)
    has_high = any(dv > 2 for dv in rest)
    conditions = []
    if d11 > 3 or d21 > 3:
        conditions.append(1)
    if d11 < 3 or d21 < 3:
        conditions.append(2)
    if d11 == 3 and d21 == 3:
        conditions.append(3)
    witness = {1: has_low, 2: has_high, 3: has_low and has_high}
    holding = tuple(c for c in conditions if witness[c])
    return DeviationCase(tuple(conditions), holding, has_low, has_high, ones_not_adjacent(s))
