import pytest

from arithlat import catalog
from arithlat import constructions as cons
from arithlat.errors import (DivisibilityError, FamilyError, InvariantError, PositivityError,
                             PrimitivityError, SymmetryError)
from arithlat.graphs import Graph
from arithlat.matrix import COLUMN_WISE, ROW_WISE
from arithlat.oracle import OracleConfig, oracle_enumerate
from arithlat.paths import enumerate_paths
from arithlat.structures import ArithStructure, laplacian_structure

import naive


def test_stack_symmetric_reproduces_catalog():
    got = [cons.stack_symmetric(p) for p in catalog.path4_structures()]
    assert got == catalog.stacked4_structures()


@pytest.mark.parametrize("m", range(1, 7))
def test_stack_symmetric_round_trip(m):
    nbrs = naive.grid_neighbors(2, m)
    for p in enumerate_paths(m):
        s = cons.stack_symmetric(p)
        assert naive.satisfies(nbrs, s.d, s.r)
        assert cons.symmetric_to_path(s) == p


def test_symmetric_to_path_rejects():
    with pytest.raises(SymmetryError):
        cons.symmetric_to_path(catalog.ladder3_table_structures()[0])
    with pytest.raises(FamilyError):
        cons.symmetric_to_path(laplacian_structure(Graph.path(3)))


def test_unit_offset_gives_symmetric_stack():
    for p in catalog.path4_structures():
        assert cons.stack_with_offset(p, (1, 1, 1, 1)) == cons.stack_symmetric(p)


def test_stack_with_offset_failures():
    ones3 = laplacian_structure(Graph.path(3))
    with pytest.raises(DivisibilityError) as err:
        cons.stack_with_offset(ones3, (1, 2, 1))
    assert 4 in err.value.vertices
    with pytest.raises(PositivityError):
        cons.stack_with_offset(ones3, (0, 0, 0))
    with pytest.raises(ValueError):
        cons.stack_with_offset(ones3, (0, -1, 0))


def test_stack_with_offset_search_agrees_with_oracle():
    # every success is an oracle structure on the row-wise ladder
    found = oracle_enumerate(OracleConfig(Graph.ladder(3, ROW_WISE), 12)).r_set()
    hits = 0
    for p in enumerate_paths(3):
        for k in [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]:
            try:
                s = cons.stack_with_offset(p, k)
            except (DivisibilityError, PositivityError, PrimitivityError):
                continue
            if max(s.r) <= 12:
                hits += 1
                assert s.r in found
    assert hits > 0


def test_kronecker_structure_example():
    p2 = enumerate_paths(2).structures[0]
    s = cons.kronecker_structure(p2, catalog.path4_structures()[0])
    assert s.graph == Graph.ladder(4, ROW_WISE)
    assert s.r == (1, 2, 1, 1) * 2
    assert s.d == (3, 2, 4, 2) * 2


def test_kronecker_structure_shapes():
    p1 = enumerate_paths(1).structures[0]
    p3 = enumerate_paths(3).structures[1]
    assert cons.kronecker_structure(p1, p3) == p3
    g = cons.kronecker_structure(p3, p3)
    assert g.graph == Graph.grid(3, 3, ROW_WISE)
    assert g.r == (1, 2, 1, 2, 4, 2, 1, 2, 1)
    assert naive.satisfies(naive.grid_neighbors(3, 3), g.d, g.r)
    with pytest.raises(FamilyError):
        cons.kronecker_structure(laplacian_structure(Graph.cycle(3)), p3)


def test_grid_column_constant():
    p = catalog.path4_structures()[0]
    assert cons.grid_column_constant(p, 1) == p
    assert cons.grid_column_constant(p, 2) == catalog.stacked4_structures()[0]
    s = cons.grid_column_constant(p, 3)
    assert s.d[4:8] == (4, 3, 5, 3)
    assert naive.satisfies(naive.grid_neighbors(3, 4), s.d, s.r)


def test_extend_column_modes():
    row1 = catalog.ladder3_table_structures()[0]
    s = cons.extend_column(row1, cons.ColumnExtensionSpec("one-rij", (1, 1)))
    assert s.r == (2, 1, 1, 1, 1, 1, 1, 2)
    assert s.d == (1, 3, 4, 3, 3, 4, 3, 1)
    ones = cons.extend_column(row1, cons.ColumnExtensionSpec("ones-ones"))
    assert ones.r == row1.r + (1, 1) and ones.verify()
    # row-wise input is converted first
    assert cons.extend_column(row1.with_ordering(ROW_WISE),
                              cons.ColumnExtensionSpec("ones-ones")) == ones


def test_extend_column_spec_validation():
    with pytest.raises(ValueError):
        cons.ColumnExtensionSpec("sideways")
    with pytest.raises(ValueError):
        cons.ColumnExtensionSpec("free-y")
    with pytest.raises(ValueError):
        cons.ColumnExtensionSpec("rij-one")


def test_free_y_search_matches_conditions():
    # the two divisibility conditions are necessary for the new column to close
    ls = catalog.ladder3_table_structures()[0]
    outcomes = cons.search_free_y(ls, cap=8)
    assert len(outcomes) == 64
    for o in outcomes:
        if o.structure is not None:
            assert o.conditions_hold and o.structure.verify()


def test_nonsymmetric_sequences():
    ladder3 = cons.build_nonsymmetric(cons.NonSymSequences((2, 1, 1), (1, 1, 1)))
    assert ladder3 == catalog.nonsymmetric_structures()[0]
    assert ladder3.d == (1, 4, 2, 3, 3, 2)
    # the same rows on P2 x P4 close with d(1,3) = 3
    ladder4 = cons.build_nonsymmetric(cons.NonSymSequences((2, 1, 1, 1), (1, 1, 1, 1)))
    assert ladder4.d == (1, 4, 3, 2, 3, 3, 3, 2)
    bad = cons.NonSymSequences((2, 3, 1), (1, 1, 1))
    assert bad.violations()
    with pytest.raises(InvariantError):
        cons.build_nonsymmetric(bad)
    with pytest.raises(PrimitivityError):
        cons.build_nonsymmetric(cons.NonSymSequences((2, 2), (2, 2)))


def test_shifted_symmetric_check():
    # r1 = (1,1), k = 1: top row needs (D1 - A - I) r1 = 1
    assert cons.shifted_symmetric_check((1, 1), (3, 3), (1, 1), 1).holds is False
    res = cons.shifted_symmetric_check((1, 2, 1), (3, 3, 3), (1, 1, 1), 1)
    assert res.determined_k is None and not res
    res = cons.shifted_symmetric_check((1, 1), (3, 3), (2, 2), 2)
    assert res.determined_k == 1 and not res


def test_delta_identity_examples():
    row1 = catalog.ladder3_table_structures()[0]
    res = cons.delta_identity_check(row1)
    assert res and res.delta == (1, 0, 0)
    for s in catalog.ladder3_table_structures() + catalog.nonsymmetric_structures()[:1]:
        assert cons.delta_identity_check(s)


def test_symmetry_propagation_vacuous_and_real():
    lap = laplacian_structure(Graph.ladder(3))
    assert cons.balanced_weights(lap) and cons.symmetry_propagates(lap)
    assert not cons.balanced_weights(catalog.ladder3_table_structures()[0])


def test_free_y_conditions_are_not_sufficient():
    seen = {"holds_and_verifies": 0, "holds_but_fails": 0}
    for ls in catalog.ladder3_table_structures():
        for o in cons.search_free_y(ls, cap=16):
            if o.conditions_hold:
                seen["holds_and_verifies" if o.structure else "holds_but_fails"] += 1
    assert seen == {"holds_and_verifies": 25, "holds_but_fails": 64}
    # r = (2,1,1,1,1,2) with y = (1,1): vertex (2,3) has r = 2 and neighbour sum 3
    ls = ArithStructure.from_r(Graph.ladder(3, COLUMN_WISE), (2, 1, 1, 1, 1, 2))
    assert cons.recursive_conditions(ls, (1, 1))
    with pytest.raises(DivisibilityError) as err:
        cons.extend_column(ls, cons.ColumnExtensionSpec("free-y", y=(1, 1)))
    assert tuple(err.value.vertices) == (5,)
