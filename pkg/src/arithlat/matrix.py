"""Dense matrices over Python's arbitrary-precision integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, InvalidSizeError

ROW_WISE = "row-wise"
COLUMN_WISE = "column-wise"
ORDERINGS = (ROW_WISE, COLUMN_WISE)


@dataclass(frozen=True)
class VertexOrdering:
    """How (i, j) grid coordinates (1-based) are flattened to indices.

    row-wise:    (i, j) -> (i-1)*cols + j
    column-wise: (i, j) -> (j-1)*rows + i
    """

    kind: str
    rows: int
    cols: int

    def __post_init__(self):
        if self.kind not in ORDERINGS:
            raise ValueError(f"unknown ordering {self.kind!r}")
        if self.rows < 1 or self.cols < 1:
            raise InvalidSizeError("ordering needs rows, cols >= 1")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def index(self, i: int, j: int) -> int:
        """1-based flat position of vertex (i, j)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"vertex ({i},{j}) outside {self.rows}x{self.cols}")
        if self.kind == ROW_WISE:
            return (i - 1) * self.cols + j
        return (j - 1) * self.rows + i

    def coord(self, position: int) -> tuple[int, int]:
        """Inverse of :meth:`index` (1-based position)."""
        p = position - 1
        if self.kind == ROW_WISE:
            return p // self.cols + 1, p % self.cols + 1
        return p % self.rows + 1, p // self.rows + 1

    def coords(self) -> list[tuple[int, int]]:
        return [self.coord(p) for p in range(1, self.size + 1)]

    def to_json(self) -> dict:
        return {"kind": self.kind, "rows": self.rows, "cols": self.cols}

    @classmethod
    def from_json(cls, obj: dict) -> "VertexOrdering":
        return cls(obj["kind"], int(obj["rows"]), int(obj["cols"]))


def reorder_permutation(src: VertexOrdering, dst: VertexOrdering) -> list[int]:
    """0-based ``perm`` with ``new[perm[k]] = old[k]`` taking src labels to dst labels."""
    if (src.rows, src.cols) != (dst.rows, dst.cols):
        raise DimensionError("orderings describe different grids")
    return [dst.index(*src.coord(k + 1)) - 1 for k in range(src.size)]


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple[int, ...], ...]
    ordering: Optional[VertexOrdering] = None

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ordering=None) -> "ExactMatrix":
        return cls(tuple(tuple(r) for r in rows), ordering)

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None) -> "ExactMatrix":
        ncols = nrows if ncols is None else ncols
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values: Sequence[int]) -> "ExactMatrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    # -- shape -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    @property
    def dim(self) -> int:
        if not self.is_square:
            raise DimensionError(f"matrix of shape {self.shape} is not square")
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        # ordering is a tag, not part of matrix identity
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def scale(self, k: int) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(k * a for a in r) for r in self.rows), self.ordering)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)) if self.rows else ())

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.transpose().rows
            return ExactMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                                     for r in self.rows))
        vec = tuple(other)
        if len(vec) != self.shape[1]:
            raise DimensionError(f"cannot multiply {self.shape} by vector of length {len(vec)}")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.rows)

    def __pow__(self, k: int) -> "ExactMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        result = ExactMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def submatrix(self, rows: Sequence[int], cols: Optional[Sequence[int]] = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return ExactMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def permuted(self, perm: Sequence[int]) -> "ExactMatrix":
        """P M P^T where P sends index k to perm[k]."""
        n = self.dim
        inv = [0] * n
        for k, p in enumerate(perm):
            inv[p] = k
        return ExactMatrix(tuple(tuple(self.rows[inv[i]][inv[j]] for j in range(n))
                                 for i in range(n)))

    def with_ordering(self, ordering: Optional[VertexOrdering]) -> "ExactMatrix":
        return ExactMatrix(self.rows, ordering)

    # -- predicates --------------------------------------------------------

    def is_symmetric(self) -> bool:
        return self.is_square and self.rows == self.transpose().rows

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "ordering": self.ordering.to_json() if self.ordering else None,
            "rows": [[str(x) for x in r] for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExactMatrix":
        rows = [[int(x) for x in r] for r in obj["rows"]]
        if len(rows) != int(obj["dim"]) or any(len(r) != len(rows) for r in rows):
            raise DimensionError("serialized matrix does not match its dim")
        ordering = obj.get("ordering")
        return cls.from_rows(rows, VertexOrdering.from_json(ordering) if ordering else None)


def kronecker(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Block matrix whose (i, j) block is a[i, j] * b."""
    (p, q), (s, t) = a.shape, b.shape
    return ExactMatrix(tuple(
        tuple(a.rows[i // s][j // t] * b.rows[i % s][j % t] for j in range(q * t))
        for i in range(p * s)
    ))


def determinant(m: ExactMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = m.dim
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
