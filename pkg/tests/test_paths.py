import pytest

from arithlat.errors import SizeCapError
from arithlat.graphs import Graph
from arithlat.paths import catalan, enumerate_paths, path_r_vectors, smooth, subdivisions

import naive

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_catalan_numbers():
    assert [catalan(k) for k in range(10)] == CATALAN


@pytest.mark.parametrize("n", range(1, 11))
def test_path_counts(n):
    assert len(enumerate_paths(n)) == CATALAN[n - 1]


def test_small_path_sets():
    assert enumerate_paths(1).structures[0].d == (0,)
    assert path_r_vectors(3) == [(1, 1, 1), (1, 2, 1)]
    assert path_r_vectors(4) == [(1, 1, 1, 1), (1, 1, 2, 1), (1, 2, 1, 1),
                                 (1, 2, 3, 1), (1, 3, 2, 1)]


@pytest.mark.parametrize("n,bound", [(3, 6), (4, 6), (5, 8), (6, 12)])
def test_paths_match_brute_force(n, bound):
    expected = set(naive.brute_force(naive.path_neighbors(n), bound))
    assert enumerate_paths(n).r_set() == expected


def test_every_path_structure_verifies():
    for n in range(1, 9):
        nbrs = naive.path_neighbors(n)
        for s in enumerate_paths(n):
            assert s.verify() and naive.satisfies(nbrs, s.d, s.r)
            assert s.r[0] == s.r[-1] == 1


def test_subdivision_and_smoothing_invert():
    for r in path_r_vectors(6):
        for child in subdivisions(r):
            assert smooth(child) is not None
    assert smooth((1, 1, 1)) is None
    assert smooth((1, 2, 1)) == (1, 1)


def test_size_cap():
    with pytest.raises(SizeCapError):
        path_r_vectors(15)
    with pytest.raises(ValueError):
        path_r_vectors(0)


def test_path_graph_tag():
    assert enumerate_paths(4).structures[0].graph == Graph.path(4)
