"""Deliberately simple reference implementations used as test oracles.

Nothing here imports arithlat: adjacency comes straight from coordinates and
enumeration is a plain product over all r vectors.
"""

from functools import reduce
from itertools import permutations, product
from math import gcd


def grid_neighbors(rows, cols, column_wise=False):
    def idx(i, j):
        return (j - 1) * rows + (i - 1) if column_wise else (i - 1) * cols + (j - 1)

    nbrs = [[] for _ in range(rows * cols)]
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            for p, q in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if 1 <= p <= rows and 1 <= q <= cols:
                    nbrs[idx(i, j)].append(idx(p, q))
    return nbrs


def path_neighbors(n):
    return grid_neighbors(1, n)


def cycle_neighbors(n):
    return [[(v - 1) % n, (v + 1) % n] for v in range(n)]


def to_matrix(nbrs):
    n = len(nbrs)
    return [[int(j in nbrs[i]) for j in range(n)] for i in range(n)]


def satisfies(nbrs, d, r):
    return all(d[v] * r[v] == sum(r[u] for u in nbrs[v]) for v in range(len(nbrs)))


def brute_force(nbrs, bound):
    """Every primitive r in [1, bound]^V with r_v | sum of neighbours, as a sorted list."""
    out = []
    for r in product(range(1, bound + 1), repeat=len(nbrs)):
        if reduce(gcd, r) == 1 and all(sum(r[u] for u in nbrs[v]) % r[v] == 0
                                       for v in range(len(nbrs))):
            out.append(r)
    return out


def leibniz_det(a):
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= a[i][perm[i]]
            if not term:
                break
        total += term
    return total


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def conjugating_permutation(a, b):
    """Some p with a[i][j] == b[p[i]][p[j]] for all i, j, or None."""
    n = len(a)
    for p in permutations(range(n)):
        if all(a[i][j] == b[p[i]][p[j]] for i in range(n) for j in range(n)):
            return p
    return None
