from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hypermatch.combinat import binom, mask_of
from hypermatch.extremal import BarrierSpec, build_barrier, space_barrier
from hypermatch.hcore import Hypergraph, random_hypergraph
from hypermatch.matching import (Matching, SizeCapError, absorbing_report, absorbing_set_count,
                                 absorbing_witness, classify_pair, estimate_absorbing_set_count,
                                 find_perfect_matching_on, has_perfect_matching, is_absorbing,
                                 max_matching, overlap_stats)
from oracles import edge_tuples, naive_has_pm, naive_max_matching


def random_small(max_n=9):
    return st.tuples(st.integers(2, max_n), st.integers(2, 3), st.integers(0, 10**6),
                     st.sampled_from([Fraction(1, 5), Fraction(2, 5), Fraction(3, 5)])
                     ).filter(lambda t: t[1] <= t[0]).map(lambda t: random_hypergraph(t[0], t[1], t[3], t[2]))


def test_complete_has_pm():
    for n, k in ((6, 2), (6, 3), (12, 3), (12, 4), (15, 5)):
        ok, M = has_perfect_matching(Hypergraph.complete(n, k))
        assert ok and M.is_perfect() and M.size == n // k


def test_pm_negative_examples():
    assert not has_perfect_matching(build_barrier(BarrierSpec(6, 2, 3, "even")))[0]
    for n in (6, 9, 12):
        assert not has_perfect_matching(space_barrier(n, 3))[0]
    assert has_perfect_matching(Hypergraph.complete(7, 3)) == (False, None)


@settings(max_examples=80, deadline=None)
@given(random_small())
def test_pm_agrees_with_naive(H):
    ok, M = has_perfect_matching(H)
    expected = H.n % H.k == 0 and naive_has_pm(H.n, edge_tuples(H))
    assert ok == expected
    if ok:
        assert M.is_perfect() and M.in_hypergraph(H)


@settings(max_examples=60, deadline=None)
@given(random_small(max_n=8))
def test_max_matching_agrees_with_naive(H):
    size, M = max_matching(H)
    assert size == M.size == naive_max_matching(edge_tuples(H))
    assert M.in_hypergraph(H)
    if H.n % H.k == 0:
        assert has_perfect_matching(H)[0] == (size == H.n // H.k)


def test_max_matching_examples():
    assert max_matching(Hypergraph.complete(6, 3))[0] == 2
    assert max_matching(space_barrier(6, 3))[0] == 1
    assert max_matching(space_barrier(12, 3))[0] == 3
    assert max_matching(Hypergraph.empty(6, 3))[0] == 0


@settings(max_examples=40, deadline=None)
@given(random_small(), st.data())
def test_adding_an_edge_keeps_pm(H, data):
    if H.num_edges == binom(H.n, H.k):
        return
    missing = [m for m in Hypergraph.complete(H.n, H.k).edge_masks if m not in H.edge_set]
    bigger = H.with_edge(data.draw(st.sampled_from(missing)))
    if has_perfect_matching(H)[0]:
        assert has_perfect_matching(bigger)[0]


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching.of(6, 3, [(0, 1, 2), (2, 3, 4)])
    M = Matching.of(6, 3, [(0, 1, 2)])
    assert M.support_set.vertices() == [0, 1, 2] and M.to_lines() == "0 1 2\n"


def test_is_absorbing_examples():
    K = Hypergraph.complete(12, 3)
    M = Matching.of(12, 3, [(0, 1, 2), (3, 4, 5)])
    assert is_absorbing(K, M, [])
    assert not is_absorbing(K, M, [6, 7])
    assert is_absorbing(K, M, [6, 7, 8])
    with pytest.raises(ValueError):
        is_absorbing(K, M, [5, 6, 7])
    H = space_barrier(9, 3)  # A = {0, 1}
    M = Matching.of(9, 3, [(0, 2, 3)])
    assert not is_absorbing(H, M, [4, 5, 6])


def test_absorbing_count_complete_and_empty():
    n, k = 9, 3
    assert absorbing_set_count(Hypergraph.complete(n, k), 0, 1) == binom(n - 2, 2 * k - 1)
    assert absorbing_set_count(Hypergraph.empty(n, k), 0, 1) == 0


def test_absorbing_count_matches_naive():
    H = random_hypergraph(9, 3, Fraction(1, 2), seed=5)
    edges = edge_tuples(H)
    for x, y in ((0, 1), (3, 8)):
        others = [v for v in range(9) if v not in (x, y)]
        expected = sum(1 for X in combinations(others, 5)
                       if naive_has_pm(9, edges, set(X) | {x}) and naive_has_pm(9, edges, set(X) | {y}))
        rep = absorbing_report(H, x, y)
        assert rep.count == expected and rep.n_examined == binom(7, 5)


def test_absorbing_random_dense_all_pairs_positive():
    H = random_hypergraph(12, 3, Fraction(7, 10), seed=1)
    for x, y in combinations(range(12), 2):
        assert absorbing_set_count(H, x, y) > 0


def test_absorbing_witness_absorbs():
    H = random_hypergraph(10, 3, Fraction(7, 10), seed=2)
    X, M, W = absorbing_witness(H, 0, 9)
    assert M.support == X | 1 and W.bit_count() == 3 and W >> 9 & 1
    assert is_absorbing(H, M, W)


def test_absorbing_size_cap_and_estimate():
    H = random_hypergraph(15, 3, Fraction(1, 2), seed=0)
    with pytest.raises(SizeCapError):
        absorbing_set_count(H, 0, 1)
    est = estimate_absorbing_set_count(H, 0, 1, samples=50, seed=3)
    assert est.estimated and est.n_examined == 50
    assert est == estimate_absorbing_set_count(H, 0, 1, samples=50, seed=3)
    with pytest.raises(ValueError):
        absorbing_set_count(Hypergraph.complete(6, 3), 2, 2)


def test_overlap_stats_examples():
    n, k = 8, 3
    s = overlap_stats(Hypergraph.complete(n, k), 0, 1)
    assert s.common_nbrs == binom(n - 2, k - 1) and s.common_non_nbrs == 0
    two_k4 = build_barrier(BarrierSpec(8, 2, 4, "even"))
    s = overlap_stats(two_k4, 0, 4, Fraction(3, 10))
    assert s.common_nbrs == 0
    assert s.common_non_nbrs == 0  # every other vertex is a neighbour of 0 or of 4
    assert overlap_stats(Hypergraph.empty(8, 3), 0, 1, Fraction(1, 100)).good_link_vertices == 0


def test_overlap_stats_brute_force():
    H = random_hypergraph(9, 3, Fraction(1, 2), seed=11)
    edges = [set(e) for e in edge_tuples(H)]
    def N(v):
        return {frozenset(e - {v}) for e in edges if v in e}
    x, y, gamma = 2, 7, Fraction(1, 40)
    thr = gamma * 9 ** 2
    s = overlap_stats(H, x, y, gamma)
    assert s.common_nbrs == len(N(x) & N(y))
    pairs = {frozenset(T) for T in combinations([v for v in range(9) if v not in (x, y)], 2)}
    assert s.common_non_nbrs == len(pairs - N(x) - N(y))
    good = sum(1 for z in range(9) if z not in (x, y)
               and len(N(x) & N(z)) >= thr and len(N(y) & N(z)) >= thr)
    assert s.good_link_vertices == good


def test_classify_pair_examples():
    c = classify_pair(Hypergraph.complete(9, 3), 0, 1, Fraction(1, 100))
    assert c.common_condition and c.absorbable and not c.separated
    two_k4 = build_barrier(BarrierSpec(8, 2, 4, "even"))
    c = classify_pair(two_k4, 0, 4, Fraction(3, 10))
    assert c.separated and not c.absorbable


def test_classify_threshold_is_inclusive():
    # K_4 2-graph: common neighbours of 0,1 = {2,3}; gamma n^(k-1) = 2 exactly at gamma=1/2
    K4 = Hypergraph.complete(4, 2)
    assert classify_pair(K4, 0, 1, Fraction(1, 2)).common_condition
    assert not classify_pair(K4, 0, 1, Fraction(51, 100)).common_condition


@settings(max_examples=40, deadline=None)
@given(random_small(), st.sampled_from([Fraction(1, 50), Fraction(1, 10), Fraction(1, 3)]))
def test_every_pair_is_classified(H, gamma):
    for x, y in ((0, 1), (0, H.n - 1)):
        if x == y:
            continue
        c = classify_pair(H, x, y, gamma)
        assert c.absorbable or c.separated
        if c.stats.good_link_vertices != c.stats.vertex_threshold:
            assert c.absorbable != c.separated


def test_find_pm_on_subset():
    H = space_barrier(9, 3)
    assert find_perfect_matching_on(H, mask_of([0, 2, 3])) is not None
    assert find_perfect_matching_on(H, mask_of([2, 3, 4])) is None
