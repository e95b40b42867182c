"""Known small structures kept as regression data.

Ladder entries record the vertex ordering they were written in.
"""

from __future__ import annotations

from .graphs import Graph
from .matrix import COLUMN_WISE, ROW_WISE
from .structures import ArithStructure

# (r, d) on P4
PATH4 = (
    ((1, 2, 1, 1), (2, 1, 3, 1)),
    ((1, 1, 2, 1), (1, 3, 1, 2)),
    ((1, 1, 1, 1), (1, 2, 2, 1)),
)

# stacked images of PATH4 on the row-wise P2 x P4
STACKED4 = (
    ((1, 2, 1, 1, 1, 2, 1, 1), (3, 2, 4, 2, 3, 2, 4, 2)),
    ((1, 1, 2, 1, 1, 1, 2, 1), (2, 4, 2, 3, 2, 4, 2, 3)),
    ((1, 1, 1, 1, 1, 1, 1, 1), (2, 3, 3, 2, 2, 3, 3, 2)),
)

# non-symmetric row-wise ladders: (m, r, d)
NONSYMMETRIC = (
    (3, (2, 1, 1, 1, 1, 1), (1, 4, 2, 3, 3, 2)),
    (4, (2, 1, 1, 1, 1, 1, 1, 1), (1, 4, 4, 2, 3, 3, 3, 2)),
)

# census over the four-state system on P2 x P3, column-wise:
# (state-index sequence, r, d); indices refer to EXAMPLE_STATES
LADDER3_TABLE = (
    ((0, 1, 1), (2, 1, 1, 1, 1, 1), (1, 3, 4, 3, 2, 2)),
    ((0, 1, 2), (2, 1, 1, 1, 1, 2), (1, 3, 4, 4, 3, 1)),
    ((0, 1, 3), (2, 1, 1, 1, 3, 2), (1, 3, 6, 4, 1, 2)),
    ((0, 1, 0), (2, 1, 1, 1, 2, 1), (1, 3, 5, 3, 1, 3)),
    ((0, 2, 0), (2, 1, 1, 1, 1, 1), (1, 3, 4, 3, 2, 2)),
    ((1, 1, 1), (1, 1, 1, 1, 1, 1), (2, 2, 3, 3, 2, 2)),
    ((1, 1, 2), (1, 1, 1, 1, 1, 2), (2, 2, 3, 4, 3, 1)),
    ((1, 1, 3), (1, 1, 1, 1, 3, 2), (2, 2, 5, 4, 1, 2)),
    ((1, 1, 0), (1, 1, 1, 1, 2, 1), (2, 2, 4, 3, 1, 3)),
    ((2, 1, 1), (1, 2, 1, 1, 1, 1), (3, 1, 3, 4, 2, 2)),
    ((2, 1, 2), (1, 2, 1, 1, 1, 2), (3, 1, 3, 5, 3, 1)),
    ((2, 1, 0), (1, 2, 1, 1, 2, 1), (3, 1, 4, 4, 1, 3)),
    ((2, 1, 3), (1, 2, 1, 1, 3, 2), (3, 1, 5, 5, 1, 2)),
    ((3, 1, 1), (3, 2, 1, 1, 1, 1), (1, 2, 5, 4, 2, 2)),
    ((3, 1, 2), (3, 2, 1, 1, 1, 2), (1, 2, 5, 5, 3, 1)),
    ((3, 1, 3), (3, 2, 1, 1, 3, 2), (1, 2, 7, 5, 1, 2)),
    ((3, 1, 0), (3, 2, 1, 1, 2, 1), (1, 2, 6, 4, 1, 3)),
)


def path4_structures() -> list[ArithStructure]:
    return [ArithStructure(Graph.path(4), d, r) for r, d in PATH4]


def stacked4_structures() -> list[ArithStructure]:
    g = Graph.ladder(4, ROW_WISE)
    return [ArithStructure(g, d, r) for r, d in STACKED4]


def nonsymmetric_structures() -> list[ArithStructure]:
    return [ArithStructure(Graph.ladder(m, ROW_WISE), d, r) for m, r, d in NONSYMMETRIC]


def ladder3_table_structures() -> list[ArithStructure]:
    g = Graph.ladder(3, COLUMN_WISE)
    return [ArithStructure(g, d, r) for _, r, d in LADDER3_TABLE]
