"""k-uniform hypergraphs stored as bitsets over colex-ranked k-subsets."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .combinat import binom, mask_of, rank_table, subset_masks, vertices_of

# Largest C(n, k) we are willing to materialize as a rank table.
MAX_KSETS = 10**7


@dataclass(frozen=True)
class VertexSubset:
    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside range({self.n})")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSubset":
        verts = list(vertices)
        if any(not 0 <= v < n for v in verts):
            raise ValueError(f"vertex out of range({n}): {verts}")
        return cls(mask_of(verts), n)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(vertices_of(self.mask))

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def vertices(self) -> list[int]:
        return vertices_of(self.mask)


def _as_mask(S, n: int) -> int:
    if isinstance(S, VertexSubset):
        return S.mask
    if isinstance(S, int):
        return S
    return VertexSubset.of(S, n).mask


class Hypergraph:
    """An immutable k-uniform hypergraph on vertices 0..n-1.

    ``bits`` has bit r set iff the k-subset of colex rank r is an edge.
    """

    __slots__ = ("n", "k", "bits", "__dict__")

    def __init__(self, n: int, k: int, bits: int = 0):
        # k > n is allowed only as the edgeless induced subgraph on few vertices.
        if k < 1 or n < 0:
            raise ValueError(f"need k >= 1 and n >= 0, got n={n}, k={k}")
        total = binom(n, k)
        if total > MAX_KSETS:
            raise ValueError(f"C({n},{k}) = {total} exceeds the dense-storage cap {MAX_KSETS}")
        if bits < 0 or bits >> total:
            raise ValueError("edge bitset has bits beyond C(n, k)")
        self.n = n
        self.k = k
        self.bits = bits

    # construction

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Sequence[int] | int]) -> "Hypergraph":
        """Build from vertex tuples or masks; duplicates are rejected."""
        table = rank_table(n, k)
        bits = 0
        for e in edges:
            if not isinstance(e, int) and len(set(e)) != len(e):
                raise ValueError(f"repeated vertex in edge {tuple(e)}")
            m = e if isinstance(e, int) else mask_of(e)
            r = table.get(m)
            if r is None:
                raise ValueError(f"{vertices_of(m)} is not a {k}-subset of range({n})")
            if bits >> r & 1:
                raise ValueError(f"duplicate edge {vertices_of(m)}")
            bits |= 1 << r
        return cls(n, k, bits)

    @classmethod
    def complete(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, (1 << binom(n, k)) - 1)

    @classmethod
    def empty(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, 0)

    @classmethod
    def from_predicate(cls, n: int, k: int, keep) -> "Hypergraph":
        """Edges are the k-subset masks ``m`` with ``keep(m)`` true."""
        bits = 0
        for r, m in enumerate(subset_masks(n, k)):
            if keep(m):
                bits |= 1 << r
        return cls(n, k, bits)

    # basic views

    @property
    def num_edges(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.num_edges

    @cached_property
    def edge_ranks(self) -> tuple[int, ...]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        masks = subset_masks(self.n, self.k)
        return tuple(masks[r] for r in self.edge_ranks)

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_masks)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex, the edge masks containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for m in self.edge_masks:
            for v in vertices_of(m):
                inc[v].append(m)
        return tuple(tuple(x) for x in inc)

    def edges(self) -> list[tuple[int, ...]]:
        """Edges as ascending vertex tuples, in colex order."""
        return [tuple(vertices_of(m)) for m in self.edge_masks]

    def has_edge(self, e: Sequence[int] | int) -> bool:
        m = e if isinstance(e, int) else mask_of(e)
        r = rank_table(self.n, self.k).get(m)
        return r is not None and bool(self.bits >> r & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self.bits) == (other.n, other.k, other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.bits))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, edges={self.num_edges})"

    # operations

    def with_edge(self, e: Sequence[int] | int) -> "Hypergraph":
        m = e if isinstance(e, int) else mask_of(e)
        r = rank_table(self.n, self.k)[m]
        return Hypergraph(self.n, self.k, self.bits | 1 << r)

    def without_edge(self, e: Sequence[int] | int) -> "Hypergraph":
        m = e if isinstance(e, int) else mask_of(e)
        r = rank_table(self.n, self.k)[m]
        return Hypergraph(self.n, self.k, self.bits & ~(1 << r))


def degree_of_set(H: Hypergraph, S) -> int:
    """Number of edges containing S."""
    s = _as_mask(S, H.n)
    if s.bit_count() > H.k:
        raise ValueError(f"|S| = {s.bit_count()} exceeds k = {H.k}")
    if s == 0:
        return H.num_edges
    low = (s & -s).bit_length() - 1
    return sum(1 for m in H.incidence[low] if m & s == s)


def ell_degrees(H: Hypergraph, ell: int) -> Counter:
    """Degree of every ell-set that lies in at least one edge, keyed by mask."""
    counts: Counter = Counter()
    for e in H.edge_masks:
        for sub in combinations(vertices_of(e), ell):
            counts[mask_of(sub)] += 1
    return counts


def min_ell_degree(H: Hypergraph, ell: int) -> tuple[int, VertexSubset]:
    """Minimum ell-degree and an ell-set attaining it.

    Degrees are accumulated by scattering each edge onto its C(k, ell)
    ell-subsets, so the cost is |E| * C(k, ell) plus one pass over the
    ell-sets. Ties go to the smallest colex rank.
    """
    if not 0 <= ell <= H.k - 1:
        raise ValueError(f"ell must satisfy 0 <= ell <= k-1, got {ell}")
    if ell == 0:
        return H.num_edges, VertexSubset(0, H.n)
    counts = ell_degrees(H, ell)
    best = None
    witness = 0
    for m in subset_masks(H.n, ell):
        d = counts.get(m, 0)
        if best is None or d < best:
            best, witness = d, m
            if d == 0:
                break
    return best, VertexSubset(witness, H.n)


def neighborhood(H: Hypergraph, v: int) -> frozenset[int]:
    """N_H(v): the (k-1)-subsets (as masks) completing v to an edge."""
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range({H.n})")
    bit = 1 << v
    return frozenset(m ^ bit for m in H.incidence[v])


def non_neighborhood_size(H: Hypergraph, v: int) -> int:
    """|binom(V - v, k-1) minus N_H(v)|."""
    return binom(H.n - 1, H.k - 1) - len(H.incidence[v])


def complement(H: Hypergraph) -> Hypergraph:
    full = (1 << binom(H.n, H.k)) - 1
    return Hypergraph(H.n, H.k, full ^ H.bits)


def induced(H: Hypergraph, X) -> Hypergraph:
    """H[X] with the vertices of X relabeled 0..|X|-1 in increasing order."""
    x = _as_mask(X, H.n)
    verts = vertices_of(x)
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [[relabel[v] for v in vertices_of(m)] for m in H.edge_masks if m & x == m]
    return Hypergraph.from_edges(len(verts), H.k, edges)


def symmetric_difference(H1: Hypergraph, H2: Hypergraph) -> int:
    if (H1.n, H1.k) != (H2.n, H2.k):
        raise ValueError(f"mismatched hypergraphs: (n,k)=({H1.n},{H1.k}) vs ({H2.n},{H2.k})")
    return (H1.bits ^ H2.bits).bit_count()


def random_hypergraph(n: int, k: int, edge_probability, seed: int) -> Hypergraph:
    """Each k-set kept independently with probability p (a rational), reproducibly."""
    p = Fraction(edge_probability)
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    bits = 0
    for r in range(binom(n, k)):
        if rng.randrange(p.denominator) < p.numerator:
            bits |= 1 << r
    return Hypergraph(n, k, bits)
