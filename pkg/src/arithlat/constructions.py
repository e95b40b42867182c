"""Builders that produce new arithmetical structures from known ones.

Every builder recomputes d from the vertex equations and re-verifies its
output; a structure that fails is reported through a FindingError subclass,
never returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from .errors import (CorollaryViolation, DivisibilityError, FamilyError, FindingError,
                     InvariantError, PositivityError, PrimitivityError, SymmetryError)
from .graphs import Graph, path_adjacency
from .matrix import COLUMN_WISE, ROW_WISE, ExactMatrix
from .structures import ArithStructure, compute_d_from_r
from .validation import as_int_vector


def _checked(s: ArithStructure) -> ArithStructure:
    result = s.verify()
    if not result:
        raise FindingError(f"builder produced an unverified structure: {result.message}")
    return s


def _require_family(s: ArithStructure, family: str):
    if s.graph.family != family:
        raise FamilyError(f"expected a {family} structure, got {s.graph.family}")


# -- stacking ------------------------------------------------------------------

def stack_symmetric(ps: ArithStructure) -> ArithStructure:
    """r = (r1, r1), d = (d1 + 1, d1 + 1) on the row-wise ladder."""
    _require_family(ps, "path")
    _checked(ps)
    d = tuple(x + 1 for x in ps.d)
    return _checked(ArithStructure(Graph.ladder(ps.graph.n, ROW_WISE), d + d, ps.r + ps.r))


def stack_with_offset(ps: ArithStructure, k: Sequence[int]) -> ArithStructure:
    """Top row (r1, d1 + k); bottom row r2 = (diag(d1 + k) - A(Pm)) r1."""
    _require_family(ps, "path")
    _checked(ps)
    m = ps.graph.n
    k = as_int_vector(k, "k", m)
    if any(x < 0 for x in k):
        raise ValueError("offset k must be non-negative")
    adj = path_adjacency(m)
    d1 = tuple(a + b for a, b in zip(ps.d, k))
    r1 = ps.r
    r2 = (ExactMatrix.diag(d1) - adj) @ r1
    bad = [i for i, x in enumerate(r2) if x <= 0]
    if bad:
        raise PositivityError(bad, f"r2 = {list(r2)} is not strictly positive")
    rhs = tuple(a + b for a, b in zip(adj @ r2, r1))
    bad = [m + i for i, (x, y) in enumerate(zip(rhs, r2)) if x % y]
    if bad:
        raise DivisibilityError(bad)
    r = r1 + tuple(r2)
    if reduce(gcd, r) != 1:
        raise PrimitivityError(f"gcd(r) = {reduce(gcd, r)}")
    d2 = tuple(x // y for x, y in zip(rhs, r2))
    return _checked(ArithStructure(Graph.ladder(m, ROW_WISE), d1 + d2, r))


# -- Kronecker / Cartesian products ---------------------------------------------

def kronecker_structure(sg: ArithStructure, sh: ArithStructure) -> ArithStructure:
    """r = x (x) y and d_(i,j) = dG_i + dH_j on the row-wise product of two paths."""
    if sg.graph.family != "path" or sh.graph.family != "path":
        raise FamilyError("kronecker_structure is supported for path x path")
    _checked(sg)
    _checked(sh)
    n, m = sg.graph.n, sh.graph.n
    if n == 1:
        graph = Graph.path(m)
    elif n == 2:
        graph = Graph.ladder(m, ROW_WISE)
    else:
        graph = Graph.grid(n, m, ROW_WISE)
    r = tuple(x * y for x in sg.r for y in sh.r)
    d = tuple(a + b for a in sg.d for b in sh.d)
    return _checked(ArithStructure(graph, d, r))


# -- column extension -------------------------------------------------------------

EXTENSION_MODES = ("ones-ones", "rij-one", "one-rij", "free-y")


@dataclass(frozen=True)
class ColumnExtensionSpec:
    mode: str
    source_index: Optional[tuple[int, int]] = None
    y: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.mode not in EXTENSION_MODES:
            raise ValueError(f"mode must be one of {EXTENSION_MODES}")
        if self.mode == "free-y":
            if self.y is None or len(self.y) != 2 or min(self.y) < 1:
                raise ValueError("free-y needs a pair of positive integers y")
        if self.mode in ("rij-one", "one-rij") and self.source_index is None:
            raise ValueError(f"{self.mode} needs source_index (i, j)")

    def new_column(self, ls: ArithStructure) -> tuple[int, int]:
        if self.mode == "ones-ones":
            return (1, 1)
        if self.mode == "free-y":
            return tuple(self.y)
        i, j = self.source_index
        if i not in (1, 2) or not 1 <= j <= ls.graph.m:
            raise ValueError(f"source_index {self.source_index} outside the ladder")
        value = ls.at(i, j)[1]
        return (value, 1) if self.mode == "rij-one" else (1, value)


def extend_column(ls: ArithStructure, spec: ColumnExtensionSpec) -> ArithStructure:
    """Append a column to a column-wise ladder structure on P2 x P(m-1).

    d is recomputed from scratch on P2 x Pm, so only the entries at the old
    last column and the new column can change.
    """
    _require_family(ls, "ladder")
    if ls.graph.ordering != COLUMN_WISE:
        ls = ls.with_ordering(COLUMN_WISE)
    _checked(ls)
    top, bottom = spec.new_column(ls)
    r = ls.r + (top, bottom)
    if reduce(gcd, r) != 1:
        raise PrimitivityError(f"gcd(r) = {reduce(gcd, r)}")
    graph = Graph.ladder(ls.graph.m + 1, COLUMN_WISE)
    d = compute_d_from_r(graph, r)
    return _checked(ArithStructure(graph, d, r))


def recursive_conditions(ls: ArithStructure, y: tuple[int, int]) -> bool:
    """y1 | r_(2m-3) + y2 and y2 | r_(2m-2) + y1 (last-column entries, column-wise)."""
    if ls.graph.ordering != COLUMN_WISE:
        ls = ls.with_ordering(COLUMN_WISE)
    y1, y2 = y
    return (ls.r[-2] + y2) % y1 == 0 and (ls.r[-1] + y1) % y2 == 0


@dataclass(frozen=True)
class FreeYOutcome:
    y: tuple[int, int]
    conditions_hold: bool
    structure: Optional[ArithStructure]
    failure: Optional[str]


def search_free_y(ls: ArithStructure, cap: int = 16) -> list[FreeYOutcome]:
    """Try every y in [1, cap]^2; records whether the stated divisibility
    conditions hold alongside whether the extension actually verifies."""
    out = []
    for y1 in range(1, cap + 1):
        for y2 in range(1, cap + 1):
            y = (y1, y2)
            cond = recursive_conditions(ls, y)
            try:
                s = extend_column(ls, ColumnExtensionSpec("free-y", y=y))
                out.append(FreeYOutcome(y, cond, s, None))
            except FindingError as e:
                out.append(FreeYOutcome(y, cond, None, str(e)))
    return out


# -- non-symmetric sequences --------------------------------------------------------

@dataclass(frozen=True)
class NonSymSequences:
    """Top row a and bottom row b of a ladder, with zeros past both ends."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a = as_int_vector(self.a, "a")
        b = as_int_vector(self.b, "b", len(a))
        if not a or min(a + b) < 1:
            raise ValueError("a and b must be nonempty positive sequences")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return len(self.a)

    def numerators(self) -> tuple[list[int], list[int]]:
        a = (0,) + self.a + (0,)
        b = (0,) + self.b + (0,)
        top = [a[i - 1] + a[i + 1] + b[i] for i in range(1, self.m + 1)]
        bot = [b[i - 1] + b[i + 1] + a[i] for i in range(1, self.m + 1)]
        return top, bot

    def violations(self) -> list[tuple[int, int]]:
        """(i, row) pairs (1-based) where the divisibility invariant fails."""
        top, bot = self.numerators()
        bad = [(i + 1, 1) for i, x in enumerate(top) if x % self.a[i]]
        bad += [(i + 1, 2) for i, x in enumerate(bot) if x % self.b[i]]
        return sorted(bad)


def build_nonsymmetric(seqs: NonSymSequences) -> ArithStructure:
    bad = seqs.violations()
    if bad:
        i, row = bad[0]
        raise InvariantError(i, row)
    r = seqs.a + seqs.b
    if reduce(gcd, r) != 1:
        raise PrimitivityError(f"gcd(r) = {reduce(gcd, r)}")
    top, bot = seqs.numerators()
    d = tuple(x // y for x, y in zip(top, seqs.a)) + tuple(x // y for x, y in zip(bot, seqs.b))
    return _checked(ArithStructure(Graph.ladder(seqs.m, ROW_WISE), d, r))


# -- shifted symmetric rows -----------------------------------------------------------

@dataclass(frozen=True)
class ShiftedCheck:
    holds: bool
    determined_k: Optional[int]
    witness: Optional[str] = None

    def __bool__(self):
        return self.holds


def shifted_symmetric_check(r1: Sequence[int], D1: Sequence[int], D2: Sequence[int],
                            k: int) -> ShiftedCheck:
    """Block test for r = (r1, r1 + k*1) with diagonal blocks D1, D2.

    Holds iff (D1 - A - I) r1 = k*1 and (D2 - A)(r1 + k*1) = r1; the constant
    value of (D1 - A - I) r1, when it is constant, is the only k that can work.
    """
    r1 = as_int_vector(r1, "r1")
    m = len(r1)
    D1 = as_int_vector(D1, "D1", m)
    D2 = as_int_vector(D2, "D2", m)
    adj = path_adjacency(m)
    first = (ExactMatrix.diag(D1) - adj - ExactMatrix.identity(m)) @ r1
    determined = first[0] if len(set(first)) == 1 else None
    if determined is None:
        return ShiftedCheck(False, None, f"(D1 - A - I) r1 = {list(first)} is not constant")
    if determined != k:
        return ShiftedCheck(False, determined, f"first block forces k = {determined}, not {k}")
    r2 = tuple(x + k for x in r1)
    second = (ExactMatrix.diag(D2) - adj) @ r2
    if second != r1:
        bad = [i for i, (x, y) in enumerate(zip(second, r1)) if x != y]
        return ShiftedCheck(False, determined, f"second block differs from r1 at {bad}")
    return ShiftedCheck(True, determined)


# -- symmetric ladders <-> paths ---------------------------------------------------------

def symmetric_to_path(ls: ArithStructure) -> ArithStructure:
    """x_i = r(1,i), d'_i = d(1,i) - 1; inverse of stack_symmetric."""
    _require_family(ls, "ladder")
    if not ls.is_row_symmetric():
        raise SymmetryError("ladder structure is not row-symmetric")
    _checked(ls)
    m = ls.graph.m
    x = tuple(ls.at(1, j)[1] for j in range(1, m + 1))
    d = tuple(ls.at(1, j)[0] - 1 for j in range(1, m + 1))
    if m > 1 and min(d) < 1:
        raise CorollaryViolation(f"reduced degrees {list(d)} are not positive")
    return _checked(ArithStructure(Graph.path(m), d, x))


def grid_column_constant(ps: ArithStructure, n: int) -> ArithStructure:
    """Copy a path structure into every row of Pn x Pm; interior rows gain 2, boundary rows 1."""
    _require_family(ps, "path")
    _checked(ps)
    if n < 1:
        raise ValueError("n must be >= 1")
    m = ps.graph.n
    if n == 1:
        return ps
    graph = Graph.ladder(m, ROW_WISE) if n == 2 else Graph.grid(n, m, ROW_WISE)
    r = ps.r * n
    d = tuple(ps.d[j] + (1 if i in (0, n - 1) else 2) for i in range(n) for j in range(m))
    return _checked(ArithStructure(graph, d, r))


# -- difference identity ---------------------------------------------------------------

@dataclass(frozen=True)
class DeltaIdentity:
    holds: bool
    delta: tuple[int, ...]
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    def __bool__(self):
        return self.holds


def delta_identity_check(ls: ArithStructure) -> DeltaIdentity:
    """delta_i = a_i - b_i satisfies d1_i a_i - d2_i b_i = delta_(i-1) + delta_(i+1) - delta_i."""
    _require_family(ls, "ladder")
    _checked(ls)
    m = ls.graph.m
    top = [ls.at(1, j) for j in range(1, m + 1)]
    bot = [ls.at(2, j) for j in range(1, m + 1)]
    delta = tuple(t[1] - b[1] for t, b in zip(top, bot))
    padded = (0,) + delta + (0,)
    lhs = tuple(t[0] * t[1] - b[0] * b[1] for t, b in zip(top, bot))
    rhs = tuple(padded[i - 1] + padded[i + 1] - padded[i] for i in range(1, m + 1))
    return DeltaIdentity(lhs == rhs, delta, lhs, rhs)


def balanced_weights(ls: ArithStructure) -> bool:
    """d_(1,i) a_i = d_(2,i) b_i for every column i."""
    m = ls.graph.m
    return all(ls.at(1, j)[0] * ls.at(1, j)[1] == ls.at(2, j)[0] * ls.at(2, j)[1]
               for j in range(1, m + 1))


def symmetry_propagates(ls: ArithStructure) -> bool:
    """Under balanced weights, two consecutive symmetric columns force a = b everywhere.

    Returns True when the implication holds (vacuously if the premise fails).
    """
    if not balanced_weights(ls):
        return True
    cols = ls.columns()
    locally = any(cols[i][0] == cols[i][1] and cols[i + 1][0] == cols[i + 1][1]
                  for i in range(len(cols) - 1))
    return not locally or ls.is_row_symmetric()
