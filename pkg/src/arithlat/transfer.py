"""Transfer-matrix machinery over column states.

A ladder P2 x Pm is a chain of m-1 four-cycles glued along rungs. A column
state is the primitive tuple of r values in one column; a transition s -> t
is admissible when the two columns carry an arithmetical structure on the
band P_n x P2 they span. For ladders this is the four divisibility
conditions a | b + c, b | a + d, c | a + d, d | b + c with s = (a, b), t = (c, d).

Walks in the admissibility digraph are candidate structures. They are lifted
and verified rather than assumed valid, because interior columns see both
neighbours and admissibility of each band alone does not close their
equations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from math import gcd
from typing import Optional, Sequence

from .errors import (EnumerationCapError, FindingError, LiftError, PrimitivityError,
                     DivisibilityError, UniquenessError)
from .graphs import Graph
from .matrix import COLUMN_WISE, ExactMatrix
from .structures import ArithStructure, compute_d_from_r

EXAMPLE_STATES = ((2, 1), (1, 1), (1, 2), (3, 2))
WALK_CAP = 10 ** 6
C4_BOUND_CAP = 64


@dataclass(frozen=True)
class ColumnState:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values or min(values) < 1:
            raise ValueError(f"column state {values} must be positive")
        if reduce(gcd, values) != 1:
            raise ValueError(f"column state {values} is not primitive")
        object.__setattr__(self, "values", values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __lt__(self, other):
        return self.values < other.values

    def __repr__(self):
        return f"ColumnState{self.values}"


def _state(s) -> ColumnState:
    return s if isinstance(s, ColumnState) else ColumnState(tuple(s))


# -- C4 census ------------------------------------------------------------------

def enumerate_c4(bound: int) -> list[ArithStructure]:
    """All primitive structures on C4 with entries <= bound.

    r = (a, c, d, b) around the cycle (1,i), (1,i+1), (2,i+1), (2,i), so
    columns are (a, b) and (c, d).
    """
    if not 1 <= bound <= C4_BOUND_CAP:
        raise ValueError(f"bound must lie in 1..{C4_BOUND_CAP}")
    graph = Graph.cycle(4)
    out = []
    rng = range(1, bound + 1)
    for a, b, c in product(rng, repeat=3):
        if (b + c) % a:
            continue
        for d in rng:
            if (b + c) % d or (a + d) % b or (a + d) % c:
                continue
            if gcd(gcd(a, b), gcd(c, d)) != 1:
                continue
            out.append(ArithStructure(graph, ((b + c) // a, (a + d) // c, (b + c) // d,
                                              (a + d) // b), (a, c, d, b)))
    out.sort(key=lambda s: s.r)
    return out


def admissible(s, t) -> bool:
    """Whether columns s, t carry a structure on the band P_n x P2 they span."""
    s, t = _state(s), _state(t)
    if len(s) != len(t):
        raise ValueError("states of different heights")
    n = len(s)
    if n == 2:
        (a, b), (c, d) = s.values, t.values
        return (b + c) % a == 0 and (a + d) % b == 0 and (a + d) % c == 0 and (b + c) % d == 0
    # both columns fix r on Pn x P2, so existence reduces to the 2n vertex divisibilities
    for col, other in ((s.values, t.values), (t.values, s.values)):
        for i in range(n):
            total = other[i] + (col[i - 1] if i > 0 else 0) + (col[i + 1] if i < n - 1 else 0)
            if total % col[i]:
                return False
    return True


def build_state_space(source: str = "paper-example", bound: Optional[int] = None,
                      n: int = 2) -> list[ColumnState]:
    """``paper-example``: the four-state example system, in its listed order.
    ``from-c4``: every primitive column pair (n = 2) or n-tuple (band census
    on Pn x P2 from the oracle) occurring within ``bound``, sorted."""
    if source == "paper-example":
        return [ColumnState(s) for s in EXAMPLE_STATES]
    if source != "from-c4":
        raise ValueError(f"unknown state-space source {source!r}")
    if bound is None:
        raise ValueError("from-c4 needs a bound")
    seen = set()
    if n == 2:
        for s in enumerate_c4(bound):
            a, c, d, b = s.r
            seen.update([(a, b), (c, d)])
    else:
        from .oracle import OracleConfig, oracle_enumerate
        band = Graph.grid(n, 2, COLUMN_WISE)
        for s in oracle_enumerate(OracleConfig(band, bound)):
            seen.update(s.columns())
    return [ColumnState(v) for v in sorted(v for v in seen if reduce(gcd, v) == 1)]


@dataclass(frozen=True)
class TransitionSystem:
    states: tuple[ColumnState, ...]
    matrix: ExactMatrix

    @property
    def dim(self) -> int:
        return len(self.states)

    def to_json(self) -> dict:
        return {"states": [list(s.values) for s in self.states],
                "matrix": self.matrix.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "TransitionSystem":
        ts = build_transition_matrix([tuple(s) for s in obj["states"]])
        given = ExactMatrix.from_rows(obj["matrix"])
        if given != ts.matrix:
            raise ValueError("serialized matrix disagrees with admissibility of its states")
        return ts


def build_transition_matrix(states: Sequence) -> TransitionSystem:
    states = tuple(_state(s) for s in states)
    if not states:
        raise ValueError("empty state list")
    if len(set(states)) != len(states):
        raise UniquenessError("duplicate column states")
    matrix = ExactMatrix(tuple(tuple(int(admissible(s, t)) for t in states) for s in states))
    return TransitionSystem(states, matrix)


def count_walks(ts: TransitionSystem, m: int) -> int:
    """1^T T^(m-1) 1: the number of state sequences of length m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(sum(row) for row in (ts.matrix ** (m - 1)).rows)


def enumerate_walks(ts: TransitionSystem, m: int, cap: int = WALK_CAP) -> list[tuple[int, ...]]:
    """All admissible index sequences of length m, lexicographic."""
    total = count_walks(ts, m)
    if total > cap:
        raise EnumerationCapError(f"{total} walks exceed the cap {cap}")
    succ = [[j for j, x in enumerate(row) if x] for row in ts.matrix.rows]
    walks = [(i,) for i in range(ts.dim)]
    for _ in range(m - 1):
        walks = [w + (j,) for w in walks for j in succ[w[-1]]]
    return walks


def lift_walk(seq: Sequence) -> ArithStructure:
    """Concatenate column states into r on the column-wise ladder (or grid) and verify.

    Raises LiftError naming the vertices whose equations do not close.
    """
    states = [_state(s) for s in seq]
    if not states:
        raise ValueError("empty walk")
    n = len(states[0])
    if any(len(s) != n for s in states):
        raise ValueError("states of different heights")
    m = len(states)
    graph = Graph.ladder(m, COLUMN_WISE) if n == 2 else Graph.grid(n, m, COLUMN_WISE)
    r = tuple(x for s in states for x in s.values)
    try:
        d = compute_d_from_r(graph, r)
    except DivisibilityError as e:
        raise LiftError(e.vertices) from None
    if reduce(gcd, r) != 1:
        raise PrimitivityError(f"gcd(r) = {reduce(gcd, r)}")
    s = ArithStructure(graph, d, r)
    if not s.verify():
        raise FindingError("lifted structure failed verification")
    return s


@dataclass(frozen=True)
class CensusReport:
    m: int
    walk_count: int
    lift_successes: tuple[ArithStructure, ...]
    success_walks: tuple[tuple[int, ...], ...]
    lift_failures: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    initial_states: tuple[int, ...] = field(default=())
    terminal_states: tuple[int, ...] = field(default=())

    @property
    def verified_count(self) -> int:
        return len(self.lift_successes)

    @property
    def failure_count(self) -> int:
        return len(self.lift_failures)

    def to_json(self, ts: Optional[TransitionSystem] = None) -> dict:
        out = {
            "m": self.m,
            "walk_count": str(self.walk_count),
            "verified_count": str(self.verified_count),
            "failure_count": str(self.failure_count),
            "lift_successes": [dict(s.to_json(), walk=list(w))
                               for s, w in zip(self.lift_successes, self.success_walks)],
            "lift_failures": [{"walk": list(w), "vertices": list(v)}
                              for w, v in self.lift_failures],
            "initial_states": list(self.initial_states),
            "terminal_states": list(self.terminal_states),
        }
        if ts is not None:
            out["system"] = ts.to_json()
        return out


def transfer_census(ts: TransitionSystem, m: int, cap: int = WALK_CAP) -> CensusReport:
    walks = enumerate_walks(ts, m, cap)
    by_r = {}
    failures = []
    for w in walks:
        try:
            s = lift_walk([ts.states[i] for i in w])
        except (LiftError, PrimitivityError) as e:
            failures.append((w, tuple(getattr(e, "vertices", ()))))
            continue
        by_r.setdefault(s.r, (s, w))
    ordered = sorted(by_r.values(), key=lambda sw: sw[1])
    successes = tuple(s for s, _ in ordered)
    success_walks = tuple(w for _, w in ordered)
    return CensusReport(m, len(walks), successes, success_walks, tuple(failures),
                        tuple(sorted({w[0] for w in success_walks})),
                        tuple(sorted({w[-1] for w in success_walks})))
