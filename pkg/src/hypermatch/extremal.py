"""Divisibility and space barriers, and the degree thresholds they define.

A barrier on ``n`` vertices is determined by ``a = |A|`` with ``A = {0..a-1}``:
the odd variant keeps the k-sets meeting A in an odd number of vertices, the
even variant those meeting it evenly. Their minimum ell-degree depends only on
``a``, so one representative per ``a`` is enough.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import EVEN, ODD, binom, parity_sum
from .hcore import Hypergraph

VARIANTS = (ODD, EVEN)


@dataclass(frozen=True)
class BarrierSpec:
    n: int
    k: int
    a: int
    variant: str  # "odd" (B_{n,k}) or "even" (its complement)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be 'odd' or 'even', got {self.variant!r}")
        if not 0 <= self.a <= self.n:
            raise ValueError(f"need 0 <= a <= n, got a={self.a}, n={self.n}")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def a_mask(self) -> int:
        return (1 << self.a) - 1

    def __str__(self) -> str:
        return f"barrier {self.n} {self.k} {self.a} {self.variant}"


@dataclass(frozen=True)
class ExtFamilyMember:
    spec: BarrierSpec
    clause: str  # which clause of the family definition admits it

    def to_dict(self) -> dict:
        return {"n": self.spec.n, "k": self.spec.k, "a": self.spec.a,
                "variant": self.spec.variant, "clause": self.clause}


def build_barrier(spec: BarrierSpec) -> Hypergraph:
    want = 1 if spec.variant == ODD else 0
    amask = spec.a_mask
    return Hypergraph.from_predicate(
        spec.n, spec.k, lambda m: (m & amask).bit_count() & 1 == want)


def _require_divisible(n: int, k: int) -> None:
    if k < 1 or n % k:
        raise ValueError(f"k={k} must divide n={n}")


def ext_family(n: int, k: int) -> list[ExtFamilyMember]:
    """The PM-free barrier family: even variant for odd a, then odd variant
    with a even (n/k odd) or a odd (n/k even)."""
    _require_divisible(n, k)
    members = [ExtFamilyMember(BarrierSpec(n, k, a, EVEN), "even-intersection, |A| odd")
               for a in range(1, n + 1, 2)]
    if (n // k) % 2:
        members += [ExtFamilyMember(BarrierSpec(n, k, a, ODD), "odd-intersection, |A| even, n/k odd")
                    for a in range(0, n + 1, 2)]
    else:
        members += [ExtFamilyMember(BarrierSpec(n, k, a, ODD), "odd-intersection, |A| odd, n/k even")
                    for a in range(1, n + 1, 2)]
    return members


def barrier_set_degree(spec: BarrierSpec, ell: int, j: int) -> int:
    """Degree in the barrier of an ell-set with j vertices in A.

    An edge through S adds i more A-vertices (out of a - j) and k - ell - i
    B-vertices (out of n - a - ell + j); |e & A| = j + i must have the
    barrier's parity.
    """
    n, k, a = spec.n, spec.k, spec.a
    target = 1 if spec.variant == ODD else 0
    parity = ODD if (target - j) % 2 else EVEN
    return parity_sum(n - a - ell + j, a - j, k - ell, parity)


def barrier_min_degree_closed_form(spec: BarrierSpec, ell: int) -> int:
    if not 1 <= ell <= spec.k - 1:
        raise ValueError(f"ell must satisfy 1 <= ell <= k-1, got {ell}")
    lo = max(0, ell - (spec.n - spec.a))
    hi = min(ell, spec.a)
    return min(barrier_set_degree(spec, ell, j) for j in range(lo, hi + 1))


def delta_threshold(n: int, k: int, ell: int) -> tuple[int, ExtFamilyMember]:
    """Largest minimum ell-degree over the barrier family, with the first
    member (in family order) attaining it."""
    if not 1 <= ell <= k - 1:
        raise ValueError(f"ell must satisfy 1 <= ell <= k-1, got {ell}")
    best = None
    arg = None
    for member in ext_family(n, k):
        d = barrier_min_degree_closed_form(member.spec, ell)
        if best is None or d > best:
            best, arg = d, member
    return best, arg


def space_barrier(n: int, k: int) -> Hypergraph:
    """All k-sets meeting A = {0, ..., n/k - 2}."""
    _require_divisible(n, k)
    if n < 2 * k:
        raise ValueError(f"space barrier needs n >= 2k, got n={n}, k={k}")
    amask = (1 << (n // k - 1)) - 1
    return Hypergraph.from_predicate(n, k, lambda m: bool(m & amask))


def space_barrier_degree(n: int, k: int, ell: int) -> int:
    """C(n-ell, k-ell) - C(|B| - ell, k-ell) with |B| = (1 - 1/k) n + 1."""
    _require_divisible(n, k)
    if not 0 <= ell <= k - 1:
        raise ValueError(f"ell must satisfy 0 <= ell <= k-1, got {ell}")
    b = n - n // k + 1
    return binom(n - ell, k - ell) - binom(b - ell, k - ell)


def conjectured_threshold(n: int, k: int, ell: int) -> int:
    delta, _ = delta_threshold(n, k, ell)
    return max(delta, space_barrier_degree(n, k, ell)) + 1
