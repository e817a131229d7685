"""Exact matching search and absorbing-structure checks.

Perfect matchings are found by exact-cover backtracking: pick the uncovered
vertex with the fewest usable edges, branch on those edges, and remember
uncovered sets already shown to be dead ends.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .combinat import binom, rank_table, vertices_of
from .hcore import Hypergraph, VertexSubset, _as_mask, neighborhood

ABSORB_MAX_N = 14


class SizeCapError(ValueError):
    """Input exceeds a documented enumeration cap."""


@dataclass(frozen=True)
class Matching:
    n: int
    k: int
    masks: tuple[int, ...]
    support: int = field(init=False)

    def __post_init__(self):
        covered = 0
        for m in self.masks:
            if m.bit_count() != self.k:
                raise ValueError(f"{vertices_of(m)} is not a {self.k}-set")
            if covered & m:
                raise ValueError("matching edges are not pairwise disjoint")
            covered |= m
        object.__setattr__(self, "support", covered)

    @classmethod
    def of(cls, n: int, k: int, edges: Iterable) -> "Matching":
        return cls(n, k, tuple(_as_mask(e, n) for e in edges))

    @property
    def size(self) -> int:
        return len(self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    @property
    def ranks(self) -> list[int]:
        table = rank_table(self.n, self.k)
        return [table[m] for m in self.masks]

    @property
    def support_set(self) -> VertexSubset:
        return VertexSubset(self.support, self.n)

    def edges(self) -> list[tuple[int, ...]]:
        return [tuple(vertices_of(m)) for m in self.masks]

    def is_perfect(self) -> bool:
        return self.support == (1 << self.n) - 1

    def in_hypergraph(self, H: Hypergraph) -> bool:
        return all(m in H.edge_set for m in self.masks)

    def to_lines(self) -> str:
        return "".join(" ".join(map(str, e)) + "\n" for e in self.edges())


def _pm_small(edge_set: frozenset, k: int, mask: int) -> Optional[list[int]]:
    """PM of the sub-hypergraph on ``mask`` by trying every k-set through
    the lowest vertex; cheap when |mask| is a small multiple of k."""
    if mask == 0:
        return []
    low = mask & -mask
    rest = vertices_of(mask ^ low)
    for combo in combinations(rest, k - 1):
        e = low
        for v in combo:
            e |= 1 << v
        if e in edge_set:
            sub = _pm_small(edge_set, k, mask ^ e)
            if sub is not None:
                sub.append(e)
                return sub
    return None


class _ExactCover:
    def __init__(self, H: Hypergraph, target: int):
        self.target = target
        self.inc = [tuple(e for e in H.incidence[v] if e & target == e)
                    if target >> v & 1 else () for v in range(H.n)]
        self.dead: set[int] = set()
        self.nodes = 0

    def solve(self, uncovered: int) -> Optional[list[int]]:
        if uncovered == 0:
            return []
        if uncovered in self.dead:
            return None
        self.nodes += 1
        best_opts = None
        rest = uncovered
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            opts = [e for e in self.inc[v] if e & uncovered == e]
            if not opts:
                self.dead.add(uncovered)
                return None
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if len(opts) == 1:
                    break
        for e in best_opts:
            sub = self.solve(uncovered ^ e)
            if sub is not None:
                sub.append(e)
                return sub
        self.dead.add(uncovered)
        return None


def find_perfect_matching_on(H: Hypergraph, X) -> Optional[list[int]]:
    """Edge masks of a perfect matching of H[X], or None."""
    mask = _as_mask(X, H.n)
    size = mask.bit_count()
    if size % H.k:
        return None
    if size <= 3 * H.k:
        return _pm_small(H.edge_set, H.k, mask)
    return _ExactCover(H, mask).solve(mask)


def has_perfect_matching(H: Hypergraph) -> tuple[bool, Optional[Matching]]:
    if H.n % H.k:
        return False, None
    found = find_perfect_matching_on(H, (1 << H.n) - 1)
    if found is None:
        return False, None
    return True, Matching(H.n, H.k, tuple(sorted(found)))


def max_matching(H: Hypergraph) -> tuple[int, Matching]:
    """Maximum matching by memoized branching on the lowest live vertex.

    A state is the set of still-available vertices; a branch stops early once
    it reaches the trivial bound |available| // k.
    """
    k = H.k
    full = (1 << H.n) - 1
    if H.n % k == 0:
        ok, pm = has_perfect_matching(H)
        if ok:
            return pm.size, pm
    inc = H.incidence
    memo: dict[int, tuple[int, int]] = {}

    def best(avail: int) -> int:
        hit = memo.get(avail)
        if hit is not None:
            return hit[0]
        bound = avail.bit_count() // k
        value, choice = 0, 0
        if bound:
            low = avail & -avail
            v = low.bit_length() - 1
            # either v stays unmatched ...
            value, choice = best(avail ^ low), 0
            # ... or v is matched by one of its available edges
            if value < bound:
                for e in inc[v]:
                    if e & avail == e:
                        cand = 1 + best(avail ^ e)
                        if cand > value:
                            value, choice = cand, e
                            if value == bound:
                                break
        memo[avail] = (value, choice)
        return value

    size = best(full)
    edges = []
    avail = full
    while avail:
        _, choice = memo[avail]
        if choice:
            edges.append(choice)
            avail ^= choice
        else:
            avail ^= avail & -avail
            if avail not in memo:
                break
    return size, Matching(H.n, k, tuple(sorted(edges)))


def is_absorbing(H: Hypergraph, M: Matching, W) -> bool:
    """True iff both H[V(M)] and H[V(M) + W] have perfect matchings."""
    w = _as_mask(W, H.n)
    if w & M.support:
        raise ValueError("W meets the support of M")
    if not M.in_hypergraph(H):
        raise ValueError("M uses edges that are not in H")
    if find_perfect_matching_on(H, M.support) is None:
        return False
    return find_perfect_matching_on(H, M.support | w) is not None


def _check_pair(H: Hypergraph, x: int, y: int) -> None:
    if x == y:
        raise ValueError("x and y must be distinct")
    for v in (x, y):
        if not 0 <= v < H.n:
            raise ValueError(f"vertex {v} out of range({H.n})")


def _absorbs_pair(H: Hypergraph, X: int, xb: int, yb: int) -> bool:
    es, k = H.edge_set, H.k
    return (_pm_small(es, k, X | xb) is not None
            and _pm_small(es, k, X | yb) is not None)


def _pair_candidates(H: Hypergraph, x: int, y: int) -> list[int]:
    return [v for v in range(H.n) if v != x and v != y]


@dataclass(frozen=True)
class AbsorbingReport:
    x: int
    y: int
    count: int
    n_examined: int
    estimated: bool = False

    def to_dict(self) -> dict:
        out = {"x": self.x, "y": self.y, "count": self.count, "nExamined": self.n_examined}
        if self.estimated:
            out["estimated"] = True
        return out


def absorbing_report(H: Hypergraph, x: int, y: int) -> AbsorbingReport:
    """Exact count of (2k-1)-sets X avoiding x, y with H[X+x] and H[X+y]
    both perfectly matchable."""
    _check_pair(H, x, y)
    if H.n > ABSORB_MAX_N:
        raise SizeCapError(
            f"exact absorbing count enumerates C(n-2, 2k-1) sets; n={H.n} exceeds "
            f"the cap {ABSORB_MAX_N} (use the sampling estimate instead)")
    xb, yb = 1 << x, 1 << y
    count = examined = 0
    for combo in combinations(_pair_candidates(H, x, y), 2 * H.k - 1):
        X = 0
        for v in combo:
            X |= 1 << v
        examined += 1
        if _absorbs_pair(H, X, xb, yb):
            count += 1
    return AbsorbingReport(x, y, count, examined)


def absorbing_set_count(H: Hypergraph, x: int, y: int) -> int:
    return absorbing_report(H, x, y).count


def estimate_absorbing_set_count(H: Hypergraph, x: int, y: int,
                                 samples: int, seed: int) -> AbsorbingReport:
    """Monte Carlo estimate of :func:`absorbing_set_count` (flagged as estimated)."""
    _check_pair(H, x, y)
    rng = random.Random(seed)
    pool = _pair_candidates(H, x, y)
    r = 2 * H.k - 1
    if len(pool) < r:
        return AbsorbingReport(x, y, 0, 0, estimated=True)
    xb, yb = 1 << x, 1 << y
    hits = 0
    for _ in range(samples):
        X = 0
        for v in rng.sample(pool, r):
            X |= 1 << v
        hits += _absorbs_pair(H, X, xb, yb)
    est = round(Fraction(hits, samples) * binom(len(pool), r)) if samples else 0
    return AbsorbingReport(x, y, est, samples, estimated=True)


def absorbing_witness(H: Hypergraph, x: int, y: int):
    """Turn a counted set X into an absorbing matching.

    With M a perfect matching of H[X + x] and T a (k-1)-set such that T + x is
    an edge avoiding X + y, the matching M absorbs W = T + y: a perfect matching
    of H[X + y] together with the edge T + x covers V(M) + W.
    Returns (X, M, W) as (mask, Matching, mask), or None if no such pair exists.
    """
    _check_pair(H, x, y)
    xb, yb = 1 << x, 1 << y
    nbrs = sorted(neighborhood(H, x))
    for combo in combinations(_pair_candidates(H, x, y), 2 * H.k - 1):
        X = 0
        for v in combo:
            X |= 1 << v
        if not _absorbs_pair(H, X, xb, yb):
            continue
        for T in nbrs:
            if T & (X | yb) == 0:
                M = Matching(H.n, H.k, tuple(sorted(_pm_small(H.edge_set, H.k, X | xb))))
                return X, M, T | yb
    return None


@dataclass(frozen=True)
class OverlapStats:
    x: int
    y: int
    gamma: Fraction
    common_nbrs: int
    common_non_nbrs: int
    good_link_vertices: int
    nbr_threshold: Fraction  # gamma * n^(k-1)
    vertex_threshold: Fraction  # gamma * n

    def to_dict(self) -> dict:
        return {
            "x": self.x, "y": self.y, "gamma": str(self.gamma),
            "commonNbrs": self.common_nbrs,
            "commonNonNbrs": self.common_non_nbrs,
            "goodLinkVertices": self.good_link_vertices,
            "nbrThreshold": str(self.nbr_threshold),
            "vertexThreshold": str(self.vertex_threshold),
        }


def overlap_stats(H: Hypergraph, x: int, y: int, gamma=Fraction(1, 20)) -> OverlapStats:
    """Neighbourhood overlaps of x and y, plus the count of link vertices z
    (z distinct from x, y) sharing at least gamma*n^(k-1) neighbours with each."""
    _check_pair(H, x, y)
    gamma = Fraction(gamma)
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie strictly between 0 and 1")
    n, k = H.n, H.k
    nx, ny = neighborhood(H, x), neighborhood(H, y)
    common = len(nx & ny)
    xyb = (1 << x) | (1 << y)
    union_avoiding = sum(1 for T in nx | ny if T & xyb == 0)
    common_non = binom(n - 2, k - 1) - union_avoiding
    nbr_thr = gamma * n ** (k - 1)
    good = 0
    for z in range(n):
        if z == x or z == y:
            continue
        nz = neighborhood(H, z)
        if len(nx & nz) >= nbr_thr and len(ny & nz) >= nbr_thr:
            good += 1
    return OverlapStats(x, y, gamma, common, common_non, good, nbr_thr, gamma * n)


@dataclass(frozen=True)
class PairClass:
    """``absorbable``: x, y share many neighbours, or many link vertices.
    ``separated``: few common neighbours and at most gamma*n link vertices.
    Every pair is in at least one; both only when the link count is exactly gamma*n."""

    stats: OverlapStats
    common_condition: bool
    link_condition: bool
    absorbable: bool
    separated: bool

    def to_dict(self) -> dict:
        return {**self.stats.to_dict(), "commonCondition": self.common_condition,
                "linkCondition": self.link_condition,
                "absorbable": self.absorbable, "separated": self.separated}


def classify_pair(H: Hypergraph, x: int, y: int, gamma=Fraction(1, 20)) -> PairClass:
    s = overlap_stats(H, x, y, gamma)
    common_ok = s.common_nbrs >= s.nbr_threshold
    link_ok = s.good_link_vertices >= s.vertex_threshold
    separated = s.common_nbrs < s.nbr_threshold and s.good_link_vertices <= s.vertex_threshold
    return PairClass(s, common_ok, link_ok, common_ok or link_ok, separated)
