"""Threshold experiments: brute-force m_ell(k, n), closeness to barriers,
c*_{k,ell} bound arithmetic and hypothesis checks for the matching theorems."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .combinat import EVEN, ODD, binom, subset_masks, vertices_of
from .extremal import (ExtFamilyMember, conjectured_threshold, delta_threshold,
                       space_barrier_degree)
from .hcore import Hypergraph, _as_mask, min_ell_degree
from .matching import SizeCapError, find_perfect_matching_on, has_perfect_matching

# Rational stand-in for ln 2, used only for the advisory crossover hint.
LN2_APPROX = Fraction(693147, 1000000)
DEFAULT_THETA = Fraction(1, 100)
DEFAULT_GAMMA = Fraction(1, 20)

BRUTE_MAX_KSETS = 20
CLOSENESS_MAX_N = 22
PM_CHECK_MAX_N = 24


class BudgetExceeded(RuntimeError):
    """Search ran out of nodes; carries the best lower bound found so far."""

    def __init__(self, lower_bound: int, witness: Optional[Hypergraph], nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes; m >= {lower_bound}")
        self.lower_bound = lower_bound
        self.witness = witness
        self.nodes = nodes


class UnknownCStarError(ValueError):
    pass


def _check_params(k: int, ell: int, n: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not 1 <= ell <= k - 1:
        raise ValueError(f"ell must satisfy 1 <= ell <= k-1, got {ell}")
    if n % k:
        raise ValueError(f"k={k} must divide n={n}")


# ---------------------------------------------------------------------------
# brute-force thresholds


@dataclass
class ThresholdReport:
    k: int
    ell: int
    n: int
    delta: int
    delta_member: ExtFamilyMember
    space: int
    conjectured: int
    brute_force: Optional[int] = None
    witness: Optional[Hypergraph] = None
    nodes: Optional[int] = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "k": self.k, "ell": self.ell, "n": self.n,
            "delta": self.delta,
            "deltaMember": self.delta_member.to_dict(),
            "space": self.space,
            "conjectured": self.conjectured,
            "bruteForce": self.brute_force,
            "witness": None if self.witness is None else [list(e) for e in self.witness.edges()],
            "nodes": self.nodes,
            "notes": list(self.notes),
        }
        return out


def threshold_report(k: int, ell: int, n: int) -> ThresholdReport:
    _check_params(k, ell, n)
    delta, member = delta_threshold(n, k, ell)
    space = space_barrier_degree(n, k, ell)
    return ThresholdReport(k, ell, n, delta, member, space, max(delta, space) + 1)


def max_pm_free_min_degree(k: int, ell: int, n: int, budget: int = 2_000_000):
    """Largest minimum ell-degree of a PM-free k-graph on n vertices.

    Depth-first over the k-sets in colex order, deciding include/exclude.
    An edge is only included if the graph stays PM-free (a new perfect matching
    would have to use it, so it suffices to match the remaining vertices).
    Branches are cut when even adding every undecided k-set cannot beat the
    incumbent, and leaves are scored only if edge-maximal: adding edges never
    destroys a perfect matching and never lowers a degree, so the optimum is
    attained on a maximal PM-free graph.

    Returns (value, witness, nodes).
    """
    total = binom(n, k)
    masks = subset_masks(n, k)
    full = (1 << n) - 1
    all_bits = (1 << total) - 1
    best = -1
    best_bits = 0
    nodes = 0

    def creates_pm(bits: int, r: int) -> bool:
        return find_perfect_matching_on(Hypergraph(n, k, bits), full ^ masks[r]) is not None

    def is_maximal(bits: int) -> bool:
        H = Hypergraph(n, k, bits)
        for r in range(total):
            if not bits >> r & 1 and find_perfect_matching_on(H, full ^ masks[r]) is None:
                return False
        return True

    def dfs(i: int, bits: int) -> None:
        nonlocal best, best_bits, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(best + 1, Hypergraph(n, k, best_bits) if best >= 0 else None, nodes)
        undecided = all_bits & ~((1 << i) - 1)
        if min_ell_degree(Hypergraph(n, k, bits | undecided), ell)[0] <= best:
            return
        if i == total:
            if is_maximal(bits):
                best = min_ell_degree(Hypergraph(n, k, bits), ell)[0]
                best_bits = bits
            return
        if not creates_pm(bits, i):
            dfs(i + 1, bits | 1 << i)
        dfs(i + 1, bits)

    dfs(0, 0)
    return best, Hypergraph(n, k, best_bits), nodes


def brute_force_threshold(k: int, ell: int, n: int, budget: int = 2_000_000) -> ThresholdReport:
    """Exact m_ell(k, n) = 1 + max{min ell-degree of a PM-free k-graph on n vertices}."""
    _check_params(k, ell, n)
    if binom(n, k) > BRUTE_MAX_KSETS:
        raise SizeCapError(
            f"brute force explores subsets of the C({n},{k}) = {binom(n, k)} k-sets; "
            f"the cap is {BRUTE_MAX_KSETS} (e.g. (k,ell,n) = (2,1,6), (3,1,6), (3,2,6))")
    rep = threshold_report(k, ell, n)
    value, witness, nodes = max_pm_free_min_degree(k, ell, n, budget)
    rep.brute_force = value + 1
    rep.witness = witness
    rep.nodes = nodes
    rep.notes.append("exhaustive search over edge-maximal PM-free hypergraphs")
    return rep


# ---------------------------------------------------------------------------
# closeness


@dataclass(frozen=True)
class ClosenessReport:
    variant: str
    n: int
    k: int
    a_vertices: tuple[int, ...]
    distance: int
    bipartitions_examined: int

    @property
    def epsilon(self) -> Fraction:
        return Fraction(self.distance, self.n ** self.k)

    def to_dict(self) -> dict:
        return {"variant": self.variant, "n": self.n, "k": self.k,
                "A": list(self.a_vertices), "distance": self.distance,
                "epsilon": str(self.epsilon),
                "bipartitionsExamined": self.bipartitions_examined}


def barrier_bits(n: int, k: int, a_mask: int, variant: str) -> int:
    want = 1 if variant == ODD else 0
    bits = 0
    for r, m in enumerate(subset_masks(n, k)):
        if (m & a_mask).bit_count() & 1 == want:
            bits |= 1 << r
    return bits


def closeness(H: Hypergraph, variant: str, A=None) -> ClosenessReport:
    """Edit distance from H to the nearest balanced barrier of the given variant.

    Any copy of the barrier on V(H) is fixed by its bipartition, so minimizing
    over the floor(n/2)-subsets A covers every isomorphic copy. If ``A`` is
    given, only that bipartition is evaluated. Ties go to the first A in colex order.
    """
    if variant not in (ODD, EVEN):
        raise ValueError(f"variant must be 'odd' or 'even', got {variant!r}")
    n, k = H.n, H.k
    if A is not None:
        candidates = [_as_mask(A, n)]
    else:
        if n > CLOSENESS_MAX_N:
            raise SizeCapError(
                f"closeness enumerates C(n, n/2) bipartitions; n={n} exceeds the cap "
                f"{CLOSENESS_MAX_N}; supply an explicit bipartition instead")
        candidates = subset_masks(n, n // 2)
    best = None
    best_a = 0
    for a in candidates:
        d = (H.bits ^ barrier_bits(n, k, a, variant)).bit_count()
        if best is None or d < best:
            best, best_a = d, a
            if d == 0:
                break
    return ClosenessReport(variant, n, k, tuple(vertices_of(best_a)), best, len(candidates))


# ---------------------------------------------------------------------------
# c* arithmetic


def cstar_space_lower(k: int, ell: int) -> Fraction:
    """1 - ((k-1)/k)^(k-ell): the density forced by the space barrier."""
    if not 1 <= ell <= k - 1:
        raise ValueError(f"ell must satisfy 1 <= ell <= k-1, got {ell}")
    return 1 - Fraction(k - 1, k) ** (k - ell)


def cstar_upper_KOT(k: int, ell: int) -> Fraction:
    """(k-ell)/k - (k-ell-1)/k^(k-ell) for ell <= k-2; the exact 1/k at ell = k-1."""
    if not 1 <= ell <= k - 1:
        raise ValueError(f"ell must satisfy 1 <= ell <= k-1, got {ell}")
    if ell == k - 1:
        return Fraction(1, k)
    return Fraction(k - ell, k) - Fraction(k - ell - 1, k ** (k - ell))


def cstar_known(k: int, ell: int) -> Optional[Fraction]:
    """Exact c*_{k,ell} where it is established (ell >= k-4), else None."""
    if k < 2 or not 1 <= ell <= k - 1:
        return None
    if ell >= k - 4:
        return cstar_space_lower(k, ell)
    return None


@dataclass(frozen=True)
class RegimeReport:
    k: int
    ell: int
    n: int
    delta_term: int
    space_term: int
    dominant: str  # "delta", "space" or "tie"
    crossover_hint: float

    def to_dict(self) -> dict:
        return {"k": self.k, "ell": self.ell, "n": self.n,
                "deltaTerm": self.delta_term, "spaceTerm": self.space_term,
                "dominant": self.dominant,
                "crossoverHint": self.crossover_hint,
                "crossoverHintNote": "advisory: asymptotic (1 - ln 2) k"}


def regime_compare(k: int, ell: int, n: int) -> RegimeReport:
    _check_params(k, ell, n)
    d, _ = delta_threshold(n, k, ell)
    s = space_barrier_degree(n, k, ell)
    dominant = "delta" if d > s else "space" if s > d else "tie"
    return RegimeReport(k, ell, n, d, s, dominant, float((1 - LN2_APPROX) * k))


# ---------------------------------------------------------------------------
# hypothesis checks


@dataclass
class HypothesisReport:
    n: int
    k: int
    ell: int
    min_deg_ell: int
    delta: int
    exceeds_delta: bool
    clauses: dict = field(default_factory=dict)
    theorems: dict = field(default_factory=dict)
    perfect_matching: Optional[bool] = None
    agreement: Optional[bool] = None

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "ell": self.ell,
                "minDegEll": self.min_deg_ell, "delta": self.delta,
                "exceedsDelta": self.exceeds_delta,
                "clauses": {k: _jsonable(v) for k, v in self.clauses.items()},
                "theorems": dict(self.theorems),
                "perfectMatching": self.perfect_matching,
                "agreement": self.agreement}


def _jsonable(v):
    return str(v) if isinstance(v, Fraction) else v


def _need_cstar(k: int, ell: int) -> Fraction:
    c = cstar_known(k, ell)
    if c is None:
        raise UnknownCStarError(f"c*_{{{k},{ell}}} is not known exactly (only for ell >= k-4)")
    return c


def check_hypotheses(H: Hypergraph, ell: int, ell_prime: Optional[int] = None,
                     theta=DEFAULT_THETA, epsilon=None, delta_prime=None,
                     run_matching: bool = True) -> HypothesisReport:
    """Evaluate the degree/closeness preconditions of the exact matching
    theorems on a concrete H.

    Three groups are checked when their parameters are present:

    * ``two_degree``: min ell-degree above delta(n,k,ell) and min
      ell'-degree above (c*_{k,ell'} + theta) C(n-ell', k-ell').
    * ``extremal`` (needs ``epsilon``): min ell-degree above delta(n,k,ell)
      and H within epsilon n^k edits of a balanced barrier.
    * ``few_big_vertices`` (needs ``epsilon`` and ``delta_prime``): vertex
      degree at least delta' C(n-1,k-1), min ell-degree at least
      (c*_{k,ell} + epsilon) C(n-ell,k-ell), and at least epsilon n vertices of
      degree at least (1 - delta' + epsilon) C(n-1,k-1).

    The theorems are asymptotic, so a true precondition at small n proves
    nothing; when ``run_matching`` is set the actual perfect-matching verdict is
    recorded next to them as ``agreement``.
    """
    n, k = H.n, H.k
    _check_params(k, ell, n)
    theta = Fraction(theta)
    delta, _ = delta_threshold(n, k, ell)
    d_ell = min_ell_degree(H, ell)[0]
    rep = HypothesisReport(n, k, ell, d_ell, delta, d_ell > delta)

    if ell_prime is not None:
        if not 1 <= ell_prime <= k - 1:
            raise ValueError(f"ell' must satisfy 1 <= ell' <= k-1, got {ell_prime}")
        c = _need_cstar(k, ell_prime)
        d_lp = min_ell_degree(H, ell_prime)[0]
        need = (c + theta) * binom(n - ell_prime, k - ell_prime)
        rep.clauses.update({"ellPrime": ell_prime, "cstarEllPrime": c, "theta": theta,
                            "minDegEllPrime": d_lp, "fractionalBound": need,
                            "exceedsFractionalBound": d_lp > need})
        rep.theorems["two_degree"] = rep.exceeds_delta and d_lp > need

    if epsilon is not None:
        eps = Fraction(epsilon)
        budget = eps * n ** k
        dists = {v: closeness(H, v).distance for v in (ODD, EVEN)}
        close = min(dists.values()) <= budget
        rep.clauses.update({"epsilon": eps, "distanceOdd": dists[ODD],
                            "distanceEven": dists[EVEN], "editBudget": budget,
                            "close": close})
        rep.theorems["extremal"] = rep.exceeds_delta and close

        if delta_prime is not None:
            dp = Fraction(delta_prime)
            c = _need_cstar(k, ell)
            vdeg = binom(n - 1, k - 1)
            degs = [len(H.incidence[v]) for v in range(n)]
            big = sum(1 for d in degs if d >= (1 - dp + eps) * vdeg)
            vertex_ok = min(degs) >= dp * vdeg
            ell_ok = d_ell >= (c + eps) * binom(n - ell, k - ell)
            rep.clauses.update({"deltaPrime": dp, "minVertexDegree": min(degs),
                                "vertexDegreeOk": vertex_ok, "ellDegreeOk": ell_ok,
                                "bigVertices": big, "bigVerticesOk": big >= eps * n})
            rep.theorems["few_big_vertices"] = vertex_ok and ell_ok and big >= eps * n

    if run_matching and n <= PM_CHECK_MAX_N:
        rep.perfect_matching = has_perfect_matching(H)[0]
        rep.agreement = rep.perfect_matching or not any(rep.theorems.values())
    return rep


__all__ = [
    "BudgetExceeded", "ClosenessReport", "HypothesisReport", "RegimeReport",
    "ThresholdReport", "UnknownCStarError", "brute_force_threshold", "check_hypotheses",
    "closeness", "conjectured_threshold", "cstar_known", "cstar_space_lower",
    "cstar_upper_KOT", "max_pm_free_min_degree", "regime_compare", "threshold_report",
]
