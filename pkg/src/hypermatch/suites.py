"""Named invariant suites, each cross-checking two independent computations.

``run_suite(name)`` returns a :class:`SuiteResult`; the CLI ``verify``
subcommand and the acceptance tests both go through here.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .analysis import (brute_force_threshold, closeness, cstar_space_lower,
                       cstar_upper_KOT)
from .combinat import EVEN, ODD, binom, evensum_asymptote, parity_sum
from .extremal import (BarrierSpec, barrier_min_degree_closed_form, build_barrier,
                       delta_threshold, ext_family, space_barrier, space_barrier_degree)
from .fractional import max_fractional_matching
from .hcore import Hypergraph, min_ell_degree, random_hypergraph
from .matching import (absorbing_report, absorbing_witness, has_perfect_matching,
                       is_absorbing)

# Fixed bound on |parity sum - leading term| / n^(r-1) over the evensum grid.
EVENSUM_CONSTANT = 1
EVENSUM_C_VALUES = (Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
                    Fraction(2, 3), Fraction(1))


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, message: str) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(message)

    def to_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checks": self.checks,
                "failures": self.failures[:20], "failureCount": len(self.failures)}


def suite_degree_formula(res: SuiteResult) -> None:
    for k in (2, 3, 4):
        for n in range(k, 13):
            for a in range(n + 1):
                for variant in (ODD, EVEN):
                    spec = BarrierSpec(n, k, a, variant)
                    H = build_barrier(spec)
                    for ell in range(1, k):
                        closed = barrier_min_degree_closed_form(spec, ell)
                        enum = min_ell_degree(H, ell)[0]
                        res.expect(closed == enum, f"{spec} ell={ell}: closed {closed} != enumerated {enum}")


def suite_space_barrier(res: SuiteResult) -> None:
    for k in (2, 3):
        for n in range(2 * k, 16, k):
            H = space_barrier(n, k)
            for ell in range(k):
                # the formula with (1 - 1/k) n evaluated as an exact rational
                top = (1 - Fraction(1, k)) * n - ell + 1
                assert top.denominator == 1
                literal = binom(n - ell, k - ell) - binom(int(top), k - ell)
                got = space_barrier_degree(n, k, ell)
                enum = min_ell_degree(H, ell)[0]
                res.expect(got == literal == enum,
                           f"H*({n},{k}) ell={ell}: formula {got}, literal {literal}, enumerated {enum}")


def suite_pm_free(res: SuiteResult) -> None:
    for k, ns in ((3, (6, 9, 12)), (2, (6, 8, 10, 12))):
        for n in ns:
            for member in ext_family(n, k):
                ok, _ = has_perfect_matching(build_barrier(member.spec))
                res.expect(not ok, f"{member.spec} has a perfect matching")
            ok, _ = has_perfect_matching(space_barrier(n, k))
            res.expect(not ok, f"H*({n},{k}) has a perfect matching")


def suite_brute_force(res: SuiteResult) -> None:
    for k, ell, n in ((2, 1, 6), (3, 1, 6), (3, 2, 6)):
        rep = brute_force_threshold(k, ell, n)
        delta = delta_threshold(n, k, ell)[0]
        m = rep.brute_force
        res.expect(m >= delta + 1, f"m_{ell}({k},{n}) = {m} < delta + 1 = {delta + 1}")
        res.expect(m >= space_barrier_degree(n, k, ell) + 1, f"m_{ell}({k},{n}) below space barrier + 1")
        res.expect(not has_perfect_matching(rep.witness)[0], f"witness for {(k, ell, n)} has a PM")
        res.expect(min_ell_degree(rep.witness, ell)[0] == m - 1,
                   f"witness for {(k, ell, n)} does not attain m - 1")
        if (k, ell, n) == (2, 1, 6):
            res.expect(m == 3 == delta + 1, f"m_1(2,6) = {m}, expected 3")
        if (k, ell, n) == (3, 1, 6):
            res.expect(m >= 5, f"m_1(3,6) = {m} < 5")


def suite_fractional(res: SuiteResult, instances: int = 200) -> None:
    for n, k in ((6, 3), (9, 3), (12, 3), (10, 5)):
        v = max_fractional_matching(space_barrier(n, k)).value
        res.expect(v == Fraction(n, k) - 1, f"nu*(H*({n},{k})) = {v}, expected {n // k - 1}")
    rng = random.Random(20240601)
    for i in range(instances):
        n = rng.randint(3, 12)
        p = Fraction(rng.randint(1, 9), 10)
        H = random_hypergraph(n, 3, p, seed=i)
        sol = max_fractional_matching(H)  # raises CertificateError on any defect
        res.expect(sol.primal.size == sol.dual.size == sol.value,
                   f"instance {i}: primal {sol.primal.size} vs dual {sol.dual.size}")


def suite_cstar(res: SuiteResult) -> None:
    res.expect(cstar_space_lower(5, 2) == Fraction(61, 125), "c*_{5,2} lower bound != 61/125")
    res.expect(cstar_space_lower(7, 3) == Fraction(1105, 2401), "c*_{7,3} lower bound != 1105/2401")
    for k in range(3, 13):
        for ell in range(1, k - 1):
            lo, hi = cstar_space_lower(k, ell), cstar_upper_KOT(k, ell)
            res.expect(lo <= hi, f"k={k} ell={ell}: lower {lo} > upper {hi}")
        for ell in range(1, k):
            if 2 * ell >= k:
                lo, hi = cstar_space_lower(k, ell), cstar_upper_KOT(k, ell)
                res.expect(lo < Fraction(1, 2) and hi < Fraction(1, 2),
                           f"k={k} ell={ell}: bounds {lo}, {hi} not below 1/2")


def suite_evensum(res: SuiteResult) -> None:
    for a in range(41):
        for b in range(41):
            for r in range(13):
                s = parity_sum(a, b, r, EVEN) + parity_sum(a, b, r, ODD)
                res.expect(s == binom(a + b, r), f"Vandermonde fails at a={a} b={b} r={r}")
    for r in range(1, 7):
        for c in EVENSUM_C_VALUES:
            for parity in (EVEN, ODD):
                for n in range(50, 1001, 50):
                    a = math.floor(c * n)
                    err = abs(parity_sum(a, n - a, r, parity) - evensum_asymptote(c, r, n, parity))
                    ratio = err / n ** (r - 1)
                    res.expect(ratio <= EVENSUM_CONSTANT,
                               f"r={r} c={c} {parity} n={n}: error ratio {ratio} > {EVENSUM_CONSTANT}")


def suite_closeness(res: SuiteResult, trials: int = 10) -> None:
    n, k = 8, 3
    B = build_barrier(BarrierSpec(n, k, n // 2, ODD))
    res.expect(closeness(B, ODD).distance == 0, "B_{8,3} is not at distance 0 from itself")
    rng = random.Random(8)
    total = binom(n, k)
    for trial in range(trials):
        t = 1 + trial % 5
        flips = rng.sample(range(total), t)
        bits = B.bits
        for r in flips:
            bits ^= 1 << r
        H = Hypergraph(n, k, bits)
        rep = closeness(H, ODD)
        res.expect(rep.distance <= t, f"trial {trial}: distance {rep.distance} > {t} toggles")
        again = closeness(H, ODD, A=list(rep.a_vertices))
        res.expect(again.distance == rep.distance,
                   f"trial {trial}: minimizer re-evaluates to {again.distance}, reported {rep.distance}")


def suite_absorbing(res: SuiteResult, seeds=range(5)) -> None:
    n, k = 12, 3
    for seed in seeds:
        H = random_hypergraph(n, k, Fraction(7, 10), seed)
        for x, y in combinations(range(n), 2):
            rep = absorbing_report(H, x, y)
            res.expect(rep.count > 0, f"seed {seed} pair ({x},{y}): no absorbing sets")
            wit = absorbing_witness(H, x, y)
            res.expect(wit is not None and is_absorbing(H, wit[1], wit[2]),
                       f"seed {seed} pair ({x},{y}): extracted matching does not absorb")


SUITES = {
    "degree-formula": suite_degree_formula,
    "space-barrier": suite_space_barrier,
    "pm-free": suite_pm_free,
    "brute-force": suite_brute_force,
    "fractional": suite_fractional,
    "cstar": suite_cstar,
    "evensum": suite_evensum,
    "closeness": suite_closeness,
    "absorbing": suite_absorbing,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    res = SuiteResult(name)
    start = time.perf_counter()
    SUITES[name](res, **kwargs)
    res.seconds = time.perf_counter() - start
    return res
