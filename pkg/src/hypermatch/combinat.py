"""Exact combinatorial primitives.

Binomials, colexicographic ranking of k-subsets (as vertex bitmasks) and the
parity-restricted Vandermonde sums used by the barrier degree formulas.
Everything here is integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence

Rational = Fraction

EVEN = "even"
ODD = "odd"


def binom(n: int, r: int) -> int:
    """C(n, r), with 0 outside 0 <= r <= n."""
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def mask_of(vertices: Sequence[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_subset_masks(n: int, k: int) -> Iterator[int]:
    """Yield every k-subset of range(n) as a bitmask, in colex order.

    Gosper's hack walks masks in increasing numeric value, which for a fixed
    popcount is exactly colexicographic order.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


@lru_cache(maxsize=64)
def subset_masks(n: int, k: int) -> tuple[int, ...]:
    """All k-subsets of range(n) as masks, indexed by colex rank."""
    return tuple(iter_subset_masks(n, k))


@lru_cache(maxsize=64)
def rank_table(n: int, k: int) -> dict[int, int]:
    return {m: r for r, m in enumerate(subset_masks(n, k))}


def rank_colex(subset: int | Sequence[int], k: int) -> int:
    """Colex rank of a k-subset given as a mask or a vertex collection.

    The rank is independent of the ground-set size:
    rank({c_1 < ... < c_k}) = sum_i C(c_i, i).
    """
    verts = vertices_of(subset) if isinstance(subset, int) else sorted(subset)
    if len(verts) != k or len(set(verts)) != k:
        raise ValueError(f"expected a {k}-subset, got {verts}")
    if verts and verts[0] < 0:
        raise ValueError("vertices must be nonnegative")
    return sum(comb(c, i + 1) for i, c in enumerate(verts))


def unrank_colex(r: int, k: int, n: int) -> int:
    """Inverse of :func:`rank_colex` on the k-subsets of range(n); returns a mask."""
    total = binom(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total})")
    mask = 0
    c = n - 1
    for i in range(k, 0, -1):
        while comb(c, i) > r:
            c -= 1
        mask |= 1 << c
        r -= comb(c, i)
        c -= 1
    return mask


def parity_sum(a: int, b: int, r: int, parity: str) -> int:
    """Sum over i of the given parity of C(a, r - i) * C(b, i)."""
    start = _parity_start(parity)
    return sum(binom(a, r - i) * binom(b, i) for i in range(start, r + 1, 2))


def evensum_asymptote(c: Fraction, r: int, n: int, parity: str) -> Fraction:
    """Leading term n^r (1 +/- (2c-1)^r) / (2 r!) of :func:`parity_sum`.

    ``+`` for even parity, ``-`` for odd, with a = c*n and b = (1-c)*n.
    """
    c = Fraction(c)
    if not 0 <= c <= 1:
        raise ValueError("c must lie in [0, 1]")
    if r < 1:
        raise ValueError("r must be >= 1")
    sign = 1 if _parity_start(parity) == 0 else -1
    return Fraction(n**r, 2 * factorial(r)) * (1 + sign * (2 * c - 1) ** r)


def _parity_start(parity: str) -> int:
    if parity == EVEN:
        return 0
    if parity == ODD:
        return 1
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def format_rational(q: Fraction | int) -> str:
    """Render as "p/q" (or "p" for integers)."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
