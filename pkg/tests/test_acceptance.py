"""Acceptance gate: ten criteria, each with its tolerance and time limit.

Every criterion prints one ``PASS``/``FAIL`` line. Run with ``pytest -v
tests/test_acceptance.py`` or directly as a script.
"""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from hypermatch.analysis import brute_force_threshold, cstar_space_lower, cstar_upper_KOT
from hypermatch.extremal import delta_threshold
from hypermatch.hcore import min_ell_degree
from hypermatch.matching import has_perfect_matching
from hypermatch.suites import run_suite

RESULTS = {}


def _report(number, title, ok, seconds, limit, detail=""):
    within = limit is None or seconds < limit
    verdict = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"{verdict} criterion {number}: {title} [{seconds:.2f}s{budget}]{' ' + detail if detail else ''}"
    RESULTS[number] = line
    print(line)
    return ok and within


def _suite_criterion(number, title, suite, limit):
    res = run_suite(suite)
    detail = f"{res.checks} checks" + (f"; first failure: {res.failures[0]}" if res.failures else "")
    assert _report(number, title, res.passed, res.seconds, limit, detail), res.failures[:5]


def test_criterion_01_degree_formula():
    _suite_criterion(1, "closed-form barrier degree equals enumeration", "degree-formula", 60)


def test_criterion_02_space_barrier():
    _suite_criterion(2, "space-barrier degree formula", "space-barrier", 10)


def test_criterion_03_pm_free_certificates():
    _suite_criterion(3, "extremal constructions have no perfect matching", "pm-free", 60)


def test_criterion_04_brute_force():
    start = time.perf_counter()
    res = run_suite("brute-force")
    ok = res.passed
    values = {}
    for ell in (1, 2):
        rep = brute_force_threshold(3, ell, 6)
        values[ell] = rep.brute_force
        ok &= rep.brute_force >= delta_threshold(6, 3, ell)[0] + 1
        ok &= not has_perfect_matching(rep.witness)[0]
        ok &= min_ell_degree(rep.witness, ell)[0] == rep.brute_force - 1
    k2 = brute_force_threshold(2, 1, 6).brute_force
    ok &= k2 == 3 == delta_threshold(6, 2, 1)[0] + 1
    ok &= values[1] >= 5
    detail = f"m_1(2,6)={k2} m_1(3,6)={values[1]} m_2(3,6)={values[2]}"
    assert _report(4, "brute-force thresholds", ok, time.perf_counter() - start, 120, detail)


def test_criterion_05_fractional():
    _suite_criterion(5, "exact fractional matchings with duality certificates", "fractional", 120)


def test_criterion_06_cstar():
    start = time.perf_counter()
    ok = cstar_space_lower(5, 2) == Fraction(61, 125)
    ok &= cstar_space_lower(7, 3) == Fraction(1105, 2401)
    for k in range(2, 13):
        for ell in range(1, k - 1):
            ok &= cstar_space_lower(k, ell) <= cstar_upper_KOT(k, ell)
    # the strict 1/2 bound is for k >= 3; at k = 2 both bounds equal 1/2 exactly
    for k in range(3, 13):
        for ell in range(1, k):
            if 2 * ell >= k:
                ok &= cstar_space_lower(k, ell) < Fraction(1, 2) and cstar_upper_KOT(k, ell) < Fraction(1, 2)
    ok &= cstar_space_lower(2, 1) == cstar_upper_KOT(2, 1) == Fraction(1, 2)
    ok &= run_suite("cstar").passed
    assert _report(6, "c* arithmetic", ok, time.perf_counter() - start, 1.0)


def test_criterion_07_evensum():
    _suite_criterion(7, "parity sums: Vandermonde closure and asymptote", "evensum", 30)


def test_criterion_08_closeness():
    _suite_criterion(8, "closeness to the balanced barrier", "closeness", 30)


def test_criterion_09_absorbing():
    _suite_criterion(9, "absorbing sets on dense random hypergraphs", "absorbing", 120)


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "hypermatch", *map(str, argv)],
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_10_determinism(tmp_path):
    start = time.perf_counter()
    rand = tmp_path / "rand.txt"
    space = tmp_path / "space.txt"
    assert _cli("construct", "random", 10, 3, "--p", "7/10", "--seed", 11, "-o", rand)[0] == 0
    assert _cli("construct", "space", 9, 3, "-o", space)[0] == 0
    commands = [
        ["construct", "random", 9, 3, "--p", "1/2", "--seed", 3],
        ["construct", "barrier", 8, 3, 4, "odd"],
        ["degree", "--ell", 2, rand],
        ["match", rand],
        ["match", space],
        ["fracmatch", rand],
        ["absorb", rand, "--x", 0, "--y", 1],
        ["absorb", rand, "--x", 2, "--y", 7, "--samples", 30, "--seed", 4],
        ["closeness", rand, "--variant", "even"],
        ["threshold", "--k", 3, "--ell", 1, "--n", 6, "--brute"],
        ["bounds", "--k", 6, "--ell", 3],
        ["verify", "--suite", "cstar"],
    ]
    mismatched = []
    for argv in commands:
        argv = argv + ["--json"]
        first, second = _cli(*argv), _cli(*argv)
        if first[0] != 0 or first != second:
            mismatched.append(" ".join(map(str, argv[:2])))
    files = []
    for i in range(2):
        path = tmp_path / f"again{i}.txt"
        _cli("construct", "random", 10, 3, "--p", "7/10", "--seed", 11, "-o", path)
        files.append(path.read_bytes())
    ok = not mismatched and files[0] == files[1] == rand.read_bytes()
    detail = f"{len(commands)} commands" + (f"; differing: {mismatched}" if mismatched else "")
    assert _report(10, "byte-identical JSON across runs", ok, time.perf_counter() - start, None, detail)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
