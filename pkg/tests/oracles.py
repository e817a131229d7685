"""Deliberately naive reference computations used as independent oracles."""

from itertools import combinations


def pascal(n, r):
    if r < 0 or r > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[r]


def edge_tuples(H):
    return [tuple(e) for e in H.edges()]


def naive_degree(edges, S):
    S = set(S)
    return sum(1 for e in edges if S <= set(e))


def naive_min_degree(n, edges, ell):
    return min(naive_degree(edges, S) for S in combinations(range(n), ell))


def naive_has_pm(n, edges, vertices=None):
    verts = frozenset(range(n) if vertices is None else vertices)
    es = [frozenset(e) for e in edges if set(e) <= verts]

    def go(left):
        if not left:
            return True
        v = min(left)
        return any(go(left - e) for e in es if v in e and e <= left)

    return go(verts)


def naive_max_matching(edges):
    es = [frozenset(e) for e in edges]
    if not es:
        return 0
    top = len(frozenset().union(*es)) // len(es[0])
    for size in range(min(top, len(es)), 0, -1):
        for combo in combinations(es, size):
            if sum(len(e) for e in combo) == len(frozenset().union(*combo)):
                return size
    return 0
