"""Maximum fractional matching / minimum fractional cover by exact simplex.

Primal: maximize sum_e w_e subject to sum_{e containing v} w_e <= 1, w >= 0.
Dual: minimize sum_v y_v subject to sum_{v in e} y_v >= 1, y >= 0.

The primal is solved by a revised simplex over :class:`~fractions.Fraction`
starting from the slack basis, with Bland's least-index rule for both the
entering and leaving choice. The optimal dual is read off the final basis, so
every solve carries its own strong-duality certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import vertices_of
from .hcore import Hypergraph

ZERO = Fraction(0)
ONE = Fraction(1)


class CertificateError(RuntimeError):
    """The solver produced a primal/dual pair that fails verification."""


@dataclass(frozen=True)
class FractionalMatching:
    weights: dict[int, Fraction]  # edge colex rank -> weight (zeros omitted)
    size: Fraction


@dataclass(frozen=True)
class FractionalCover:
    y: dict[int, Fraction]  # vertex -> weight, every vertex present
    size: Fraction


@dataclass(frozen=True)
class FractionalSolution:
    value: Fraction
    primal: FractionalMatching
    dual: FractionalCover
    pivots: int

    def to_dict(self) -> dict:
        return {
            "value": str(self.value),
            "weights": [[r, str(w)] for r, w in sorted(self.primal.weights.items())],
            "cover": [[str(v), str(c)] for v, c in sorted(self.dual.y.items())],
        }


def _simplex(n: int, cols: list[tuple[int, ...]]):
    """Return (x, y, pivots): primal values per column, dual per row."""
    m = len(cols)
    # basic[i] is the variable index basic in row i; slacks are m..m+n-1.
    basic = [m + i for i in range(n)]
    binv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    xb = [ONE] * n
    pivots = 0
    while True:
        # y = c_B^T B^-1; only edge columns have unit cost
        y = [ZERO] * n
        for i in range(n):
            if basic[i] < m:
                row = binv[i]
                for v in range(n):
                    if row[v]:
                        y[v] += row[v]
        in_basis = set(basic)
        entering = -1
        for j in range(m):
            if j not in in_basis and ONE - sum(y[v] for v in cols[j]) > 0:
                entering = j
                break
        if entering < 0:
            for v in range(n):
                if m + v not in in_basis and -y[v] > 0:
                    entering = m + v
                    break
        if entering < 0:
            break
        if entering < m:
            u = [sum(binv[i][v] for v in cols[entering]) for i in range(n)]
        else:
            u = [binv[i][entering - m] for i in range(n)]
        leave, best = -1, None
        for i in range(n):
            if u[i] > 0:
                ratio = xb[i] / u[i]
                if best is None or ratio < best or (ratio == best and basic[i] < basic[leave]):
                    leave, best = i, ratio
        if leave < 0:
            raise CertificateError("matching LP reported unbounded")
        piv = u[leave]
        prow = [c / piv for c in binv[leave]]
        px = xb[leave] / piv
        for i in range(n):
            if i == leave or not u[i]:
                continue
            f = u[i]
            row = binv[i]
            for v in range(n):
                if prow[v]:
                    row[v] -= f * prow[v]
            xb[i] -= f * px
        binv[leave] = prow
        xb[leave] = px
        basic[leave] = entering
        pivots += 1
    x = [ZERO] * m
    for i in range(n):
        if basic[i] < m:
            x[basic[i]] = xb[i]
    return x, y, pivots


def max_fractional_matching(H: Hypergraph) -> FractionalSolution:
    """Exact nu*(H) with an optimal fractional matching and a cover of equal size."""
    cols = [tuple(vertices_of(m)) for m in H.edge_masks]
    x, y, pivots = _simplex(H.n, cols)
    weights = {r: w for r, w in zip(H.edge_ranks, x) if w}
    primal = FractionalMatching(weights, sum(x, ZERO))
    dual = FractionalCover({v: y[v] for v in range(H.n)}, sum(y, ZERO))
    verify_certificate(H, primal, dual)
    return FractionalSolution(primal.size, primal, dual, pivots)


def verify_certificate(H: Hypergraph, primal: FractionalMatching, dual: FractionalCover) -> None:
    """Check feasibility of both sides and equality of their sizes; raise on failure."""
    masks = dict(zip(H.edge_ranks, H.edge_masks))
    load = [ZERO] * H.n
    for r, w in primal.weights.items():
        if r not in masks:
            raise CertificateError(f"weight on non-edge rank {r}")
        if not 0 <= w <= 1:
            raise CertificateError(f"weight {w} outside [0, 1]")
        for v in vertices_of(masks[r]):
            load[v] += w
    if any(c > 1 for c in load):
        raise CertificateError("a vertex carries total weight above 1")
    if any(c < 0 for c in dual.y.values()):
        raise CertificateError("negative cover weight")
    for m in H.edge_masks:
        if sum((dual.y[v] for v in vertices_of(m)), ZERO) < 1:
            raise CertificateError(f"edge {vertices_of(m)} is not covered")
    if sum(primal.weights.values(), ZERO) != primal.size or sum(dual.y.values(), ZERO) != dual.size:
        raise CertificateError("reported size differs from the sum of weights")
    if primal.size > dual.size:
        raise CertificateError("weak duality violated")
    if primal.size != dual.size:
        raise CertificateError(f"duality gap {dual.size - primal.size}")


def has_perfect_fractional_matching(H: Hypergraph) -> bool:
    return max_fractional_matching(H).value == Fraction(H.n, H.k)
