"""Arithmetical structures on paths, cycles, ladders P2 x Pm and grids Pn x Pm."""

__version__ = "0.1.0"

from .graphs import (Graph, cartesian_adjacency, cycle_adjacency, grid_adjacency,
                     kronecker_product, ladder_adjacency, ladder_block_decompose,
                     path_adjacency, permute_structure)
from .matrix import COLUMN_WISE, ROW_WISE, ExactMatrix, VertexOrdering, determinant
from .structures import (ArithStructure, MMatrixReport, classify_deviation, compute_d_from_r,
                         is_primitive, laplacian_structure, m_matrix_report, verify)
from .paths import catalan, enumerate_paths
from .oracle import OracleConfig, oracle_count_symmetric, oracle_enumerate
from .transfer import (ColumnState, TransitionSystem, admissible, build_state_space,
                       build_transition_matrix, count_walks, enumerate_c4, enumerate_walks,
                       lift_walk, transfer_census)

__all__ = [
    "ArithStructure", "COLUMN_WISE", "ColumnState", "ExactMatrix", "Graph", "MMatrixReport",
    "OracleConfig", "ROW_WISE", "TransitionSystem", "VertexOrdering", "admissible",
    "build_state_space", "build_transition_matrix", "cartesian_adjacency", "catalan",
    "classify_deviation", "compute_d_from_r", "count_walks", "cycle_adjacency", "determinant",
    "enumerate_c4", "enumerate_paths", "enumerate_walks", "grid_adjacency", "is_primitive",
    "kronecker_product", "ladder_adjacency", "ladder_block_decompose", "laplacian_structure",
    "lift_walk", "m_matrix_report", "oracle_count_symmetric", "oracle_enumerate",
    "path_adjacency", "permute_structure", "transfer_census", "verify",
]
