"""Adjacency matrices for paths, cycles, ladders and grids.

Ladders are P2 x Pm and grids are Pn x Pm (Cartesian products). Vertices of
product graphs carry 1-based coordinates (i, j), row i in 1..n and column j in
1..m. A :class:`~arithlat.matrix.VertexOrdering` records how coordinates are
flattened.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import FamilyError, InvalidPermutationError, InvalidSizeError, DimensionError
from .matrix import (COLUMN_WISE, ORDERINGS, ROW_WISE, ExactMatrix, VertexOrdering,
                     kronecker, reorder_permutation)

FAMILIES = ("path", "cycle", "ladder", "grid")


def path_adjacency(n: int) -> ExactMatrix:
    if n < 1:
        raise InvalidSizeError(f"path needs n >= 1, got {n}")
    return ExactMatrix(tuple(tuple(int(abs(i - j) == 1) for j in range(n)) for i in range(n)),
                       VertexOrdering(ROW_WISE, 1, n))


def cycle_adjacency(n: int) -> ExactMatrix:
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    return ExactMatrix(tuple(tuple(int((i - j) % n in (1, n - 1)) for j in range(n))
                             for i in range(n)))


def kronecker_product(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return kronecker(a, b)


def cartesian_adjacency(a_g: ExactMatrix, a_h: ExactMatrix) -> ExactMatrix:
    """A_G (x) I + I (x) A_H, tagged row-wise with dim(A_G) rows."""
    p, q = a_g.dim, a_h.dim
    adj = kronecker(a_g, ExactMatrix.identity(q)) + kronecker(ExactMatrix.identity(p), a_h)
    return adj.with_ordering(VertexOrdering(ROW_WISE, p, q))


def _reordered(adj: ExactMatrix, ordering: str) -> ExactMatrix:
    src = adj.ordering
    dst = VertexOrdering(ordering, src.rows, src.cols)
    if ordering == src.kind:
        return adj.with_ordering(dst)
    return adj.permuted(reorder_permutation(src, dst)).with_ordering(dst)


def _check_ordering(ordering: str) -> str:
    if ordering not in ORDERINGS:
        raise ValueError(f"ordering must be one of {ORDERINGS}, got {ordering!r}")
    return ordering


def grid_adjacency(n: int, m: int, ordering: str = ROW_WISE) -> ExactMatrix:
    if n < 1 or m < 1:
        raise InvalidSizeError(f"grid needs n, m >= 1, got {n}x{m}")
    return _reordered(cartesian_adjacency(path_adjacency(n), path_adjacency(m)),
                      _check_ordering(ordering))


def ladder_adjacency(m: int, ordering: str = ROW_WISE) -> ExactMatrix:
    if m < 1:
        raise InvalidSizeError(f"ladder needs m >= 1, got {m}")
    return grid_adjacency(2, m, ordering)


@dataclass(frozen=True)
class LadderBlocks:
    upper_left: ExactMatrix
    bridge: ExactMatrix
    lower_right: ExactMatrix

    def assemble(self) -> ExactMatrix:
        top = [ul + br for ul, br in zip(self.upper_left.rows, self.bridge.rows)]
        bottom = [bt + lr for bt, lr in zip(self.bridge.transpose().rows, self.lower_right.rows)]
        return ExactMatrix.from_rows(top + bottom)


def ladder_block_decompose(m: int) -> LadderBlocks:
    """Split the column-wise ladder adjacency into its old-columns/new-column blocks."""
    if m < 2:
        raise InvalidSizeError(f"block decomposition needs m >= 2, got {m}")
    k = 2 * (m - 1)
    bridge = ExactMatrix(tuple(
        tuple(int(i - (k - 2) == j) for j in range(2)) for i in range(k)))
    return LadderBlocks(ladder_adjacency(m - 1, COLUMN_WISE), bridge, path_adjacency(2))


def check_permutation(perm: Sequence[int], n: int) -> list[int]:
    perm = [int(p) for p in perm]
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise InvalidPermutationError(f"{perm} is not a permutation of range({n})")
    return perm


def permute_structure(adj: ExactMatrix, d: Sequence[int], r: Sequence[int],
                      perm: Sequence[int]):
    """Relabel vertex k as perm[k]; returns (P A P^T, P d, P r)."""
    n = adj.dim
    if len(d) != n or len(r) != n:
        raise DimensionError("vector length does not match matrix dimension")
    perm = check_permutation(perm, n)
    new_d = [0] * n
    new_r = [0] * n
    for k, p in enumerate(perm):
        new_d[p] = d[k]
        new_r[p] = r[k]
    return adj.permuted(perm), tuple(new_d), tuple(new_r)


@lru_cache(maxsize=256)
def _adjacency(family: str, n: int, m: Optional[int], ordering: str) -> ExactMatrix:
    if family == "path":
        return path_adjacency(n)
    if family == "cycle":
        return cycle_adjacency(n)
    if family == "ladder":
        return ladder_adjacency(m, ordering)
    return grid_adjacency(n, m, ordering)


@dataclass(frozen=True)
class Graph:
    """Descriptor of one graph from the supported families.

    ``path``/``cycle`` use ``n`` as the vertex count; ``ladder`` is the grid
    with ``n == 2``; ``grid`` has ``n`` rows and ``m`` columns.
    """

    family: str
    n: int
    m: Optional[int] = None
    ordering: str = ROW_WISE

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyError(f"unknown family {self.family!r}")
        _check_ordering(self.ordering)
        if self.family in ("path", "cycle"):
            if self.m is not None:
                raise InvalidSizeError(f"{self.family} takes only n")
            if self.ordering != ROW_WISE:
                object.__setattr__(self, "ordering", ROW_WISE)
            minimum = 1 if self.family == "path" else 3
            if self.n < minimum:
                raise InvalidSizeError(f"{self.family} needs n >= {minimum}, got {self.n}")
        else:
            if self.family == "ladder" and self.n != 2:
                raise InvalidSizeError("a ladder always has n = 2")
            if self.m is None or self.m < 1 or self.n < 1:
                raise InvalidSizeError(f"{self.family} needs n, m >= 1")

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls("path", n)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls("cycle", n)

    @classmethod
    def ladder(cls, m: int, ordering: str = ROW_WISE) -> "Graph":
        return cls("ladder", 2, m, ordering)

    @classmethod
    def grid(cls, n: int, m: int, ordering: str = ROW_WISE) -> "Graph":
        return cls("grid", n, m, ordering)

    @property
    def rows(self) -> int:
        return 1 if self.family in ("path", "cycle") else self.n

    @property
    def cols(self) -> int:
        return self.n if self.family in ("path", "cycle") else self.m

    @property
    def num_vertices(self) -> int:
        return self.rows * self.cols

    @property
    def vertex_ordering(self) -> VertexOrdering:
        return VertexOrdering(self.ordering, self.rows, self.cols)

    @property
    def adjacency(self) -> ExactMatrix:
        return _adjacency(self.family, self.n, self.m, self.ordering)

    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return _neighbors(self)

    def degrees(self) -> tuple[int, ...]:
        return self.adjacency.row_sums()

    def index(self, i: int, j: int) -> int:
        """0-based flat index of 1-based coordinate (i, j)."""
        return self.vertex_ordering.index(i, j) - 1

    def coord(self, v: int) -> tuple[int, int]:
        return self.vertex_ordering.coord(v + 1)

    def with_ordering(self, ordering: str) -> "Graph":
        return Graph(self.family, self.n, self.m, ordering)

    def is_connected(self) -> bool:
        nbrs = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            for u in nbrs[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.num_vertices

    def label(self) -> str:
        if self.family in ("path", "cycle"):
            return f"{self.family}({self.n})"
        return f"{self.family}({self.n}x{self.m},{self.ordering})"

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "m": self.m, "ordering": self.ordering}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        family = obj["family"]
        m = obj.get("m")
        n = obj.get("n")
        if family == "ladder" and n is None:
            n = 2
        return cls(family, int(n), None if m is None else int(m),
                   obj.get("ordering") or ROW_WISE)


@lru_cache(maxsize=256)
def _neighbors(graph: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(j for j, a in enumerate(row) if a) for row in graph.adjacency.rows)
