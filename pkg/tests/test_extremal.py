from fractions import Fraction

import pytest

from hypermatch.combinat import binom
from hypermatch.extremal import (BarrierSpec, barrier_min_degree_closed_form, build_barrier,
                                 conjectured_threshold, delta_threshold, ext_family,
                                 space_barrier, space_barrier_degree)
from hypermatch.hcore import complement, min_ell_degree
from hypermatch.matching import has_perfect_matching
from oracles import edge_tuples, naive_has_pm, naive_min_degree


def test_barrier_k2_examples():
    even = build_barrier(BarrierSpec(6, 2, 3, "even"))
    assert set(edge_tuples(even)) == {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    odd = build_barrier(BarrierSpec(6, 2, 3, "odd"))
    assert set(edge_tuples(odd)) == {(a, b) for a in range(3) for b in range(3, 6)}


def test_barrier_variants_complementary():
    for n in range(2, 11):
        for k in range(1, min(n, 4) + 1):
            for a in range(n + 1):
                odd = build_barrier(BarrierSpec(n, k, a, "odd"))
                even = build_barrier(BarrierSpec(n, k, a, "even"))
                assert odd == complement(even)
                assert odd.num_edges + even.num_edges == binom(n, k)


def _members(fam):
    return sorted((m.spec.variant, m.spec.a) for m in fam)


def test_ext_family_definition():
    assert _members(ext_family(6, 3)) == sorted(
        [("even", a) for a in (1, 3, 5)] + [("odd", a) for a in (1, 3, 5)])
    assert _members(ext_family(9, 3)) == sorted(
        [("even", a) for a in (1, 3, 5, 7, 9)] + [("odd", a) for a in (0, 2, 4, 6, 8)])
    with pytest.raises(ValueError):
        ext_family(7, 3)


def test_ext_family_members_have_no_pm_naive():
    for n, k in ((6, 2), (6, 3), (8, 4), (8, 2)):
        for member in ext_family(n, k):
            H = build_barrier(member.spec)
            assert not naive_has_pm(n, edge_tuples(H))
            assert not has_perfect_matching(H)[0]


def test_closed_form_examples():
    assert barrier_min_degree_closed_form(BarrierSpec(6, 3, 3, "even"), 1) == 4
    assert barrier_min_degree_closed_form(BarrierSpec(6, 3, 1, "even"), 1) == 0
    with pytest.raises(ValueError):
        barrier_min_degree_closed_form(BarrierSpec(6, 3, 3, "even"), 3)


def test_closed_form_matches_naive_enumeration():
    # independent of both the scatter-based min degree and parity sums
    for n in range(3, 9):
        for k in (2, 3):
            for a in range(n + 1):
                for variant in ("odd", "even"):
                    spec = BarrierSpec(n, k, a, variant)
                    edges = edge_tuples(build_barrier(spec))
                    for ell in range(1, k):
                        assert barrier_min_degree_closed_form(spec, ell) == naive_min_degree(n, edges, ell)


def test_delta_threshold_examples():
    value, member = delta_threshold(6, 2, 1)
    assert value == 2
    assert (member.spec.variant, member.spec.a) == ("even", 3)
    degrees = [barrier_min_degree_closed_form(m.spec, 1) for m in ext_family(6, 3)]
    assert sorted(degrees) == [0, 0, 4, 4, 4, 4]
    assert delta_threshold(6, 3, 1)[0] == 4


def test_delta_threshold_near_half():
    half = Fraction(1, 2)
    devs = {}
    for n in range(6, 61, 3):
        d, _ = delta_threshold(n, 3, 1)
        devs[n] = abs(Fraction(d, binom(n - 1, 2)) - half)
        assert devs[n] <= Fraction(1, 10)
    # deviations shrink: the envelope over larger n sits below the one over small n
    assert max(v for n, v in devs.items() if n >= 30) < max(v for n, v in devs.items() if n < 30)


def test_delta_is_max_over_enumerated_family():
    for n, k in ((6, 2), (6, 3), (8, 4), (9, 3)):
        for ell in range(1, k):
            enumerated = max(min_ell_degree(build_barrier(m.spec), ell)[0] for m in ext_family(n, k))
            assert delta_threshold(n, k, ell)[0] == enumerated


def test_space_barrier_examples():
    assert space_barrier_degree(6, 3, 1) == 4
    H = space_barrier(6, 3)
    assert min_ell_degree(H, 1)[0] == 4
    for n in range(4, 16):
        for k in (2, 3):
            if n % k or n < 2 * k:
                continue
            H = space_barrier(n, k)
            for ell in range(k):
                assert space_barrier_degree(n, k, ell) == min_ell_degree(H, ell)[0]
    with pytest.raises(ValueError):
        space_barrier(7, 3)


def test_space_barrier_has_no_pm():
    for n in (6, 9, 12):
        H = space_barrier(n, 3)
        assert not has_perfect_matching(H)[0]
    assert not naive_has_pm(6, edge_tuples(space_barrier(6, 3)))


def test_conjectured_threshold():
    assert conjectured_threshold(6, 2, 1) == 3
    assert conjectured_threshold(6, 3, 1) == 5
    d, _ = delta_threshold(60, 3, 2)
    assert d > space_barrier_degree(60, 3, 2)
    assert conjectured_threshold(60, 3, 2) == d + 1


def test_barrier_spec_validation():
    with pytest.raises(ValueError):
        BarrierSpec(6, 3, 7, "odd")
    with pytest.raises(ValueError):
        BarrierSpec(6, 3, 2, "both")
