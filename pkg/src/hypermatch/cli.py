"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 size cap or search budget
exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import analysis, matching
from .combinat import EVEN, ODD, format_rational, parse_rational
from .extremal import BarrierSpec, build_barrier, space_barrier
from .fractional import max_fractional_matching
from .hcore import Hypergraph, min_ell_degree, random_hypergraph
from .io import HypergraphFormatError, format_hypergraph, read_hypergraph, write_hypergraph
from .suites import SUITES, run_suite

EXIT_INPUT = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    if args.kind == "barrier":
        if args.variant is None or args.a is None:
            raise UsageError("construct barrier needs N K A {odd|even}")
        spec = BarrierSpec(args.n, args.k, args.a, args.variant)
        H, label = build_barrier(spec), str(spec)
    elif args.kind == "space":
        H, label = space_barrier(args.n, args.k), f"space {args.n} {args.k}"
    elif args.kind == "complete":
        H, label = Hypergraph.complete(args.n, args.k), f"complete {args.n} {args.k}"
    else:
        if args.p is None or args.seed is None:
            raise UsageError("construct random needs N K --p P --seed S (an explicit seed is required)")
        H = random_hypergraph(args.n, args.k, args.p, args.seed)
        label = f"random {args.n} {args.k} {format_rational(args.p)} seed={args.seed}"
    if args.output:
        write_hypergraph(H, args.output)
    payload = {"construction": label, "n": H.n, "k": H.k, "m": H.num_edges,
               "output": args.output}
    if not args.output:
        payload["edges"] = [list(e) for e in H.edges()]
    text = format_hypergraph(H) if not args.output else f"{label}: wrote {H.num_edges} edges to {args.output}\n"
    _emit(args, payload, text)
    return 0


def cmd_degree(args) -> int:
    H = read_hypergraph(args.file)
    value, witness = min_ell_degree(H, args.ell)
    payload = {"ell": args.ell, "minDegree": value, "witness": witness.vertices()}
    _emit(args, payload, f"min {args.ell}-degree: {value}\nwitness: {' '.join(map(str, witness))}\n")
    return 0


def cmd_match(args) -> int:
    H = read_hypergraph(args.file)
    ok, pm = matching.has_perfect_matching(H)
    if ok:
        M = pm
    else:
        _, M = matching.max_matching(H)
    payload = {"perfect": ok, "size": M.size, "target": H.n // H.k,
               "matching": [list(e) for e in M.edges()]}
    head = "perfect matching: yes\n" if ok else f"perfect matching: no (maximum matching size {M.size})\n"
    _emit(args, payload, head + M.to_lines())
    return 0


def cmd_fracmatch(args) -> int:
    H = read_hypergraph(args.file)
    sol = max_fractional_matching(H)
    perfect = sol.value == Fraction(H.n, H.k)
    payload = {**sol.to_dict(), "perfect": perfect}
    lines = [f"value: {sol.value}", f"perfect: {'yes' if perfect else 'no'}", "weights:"]
    lines += [f"  {r} {w}" for r, w in payload["weights"]]
    lines.append("cover:")
    lines += [f"  {v} {c}" for v, c in payload["cover"]]
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def cmd_absorb(args) -> int:
    H = read_hypergraph(args.file)
    cls = matching.classify_pair(H, args.x, args.y, args.gamma)
    if args.samples is not None:
        if args.seed is None:
            raise UsageError("--samples requires an explicit --seed")
        rep = matching.estimate_absorbing_set_count(H, args.x, args.y, args.samples, args.seed)
    else:
        rep = matching.absorbing_report(H, args.x, args.y)
    payload = {"overlap": cls.to_dict(), "absorbing": rep.to_dict()}
    s = cls.stats
    text = (f"common neighbours: {s.common_nbrs} (threshold {s.nbr_threshold})\n"
            f"common non-neighbours: {s.common_non_nbrs}\n"
            f"good link vertices: {s.good_link_vertices} (threshold {s.vertex_threshold})\n"
            f"absorbable: {cls.absorbable}  separated: {cls.separated}\n"
            f"absorbing sets: {rep.count}{' (estimate)' if rep.estimated else ''}"
            f" of {rep.n_examined} examined\n")
    _emit(args, payload, text)
    return 0


def cmd_closeness(args) -> int:
    H = read_hypergraph(args.file)
    A = None
    if args.A is not None:
        A = [int(t) for t in args.A.split(",") if t.strip()] if args.A.strip() else []
    rep = analysis.closeness(H, args.variant, A)
    text = (f"variant: {rep.variant}\nA: {' '.join(map(str, rep.a_vertices))}\n"
            f"distance: {rep.distance}\nepsilon: {rep.epsilon}\n")
    _emit(args, rep.to_dict(), text)
    return 0


CSV_FIELDS = ("k", "ell", "n", "delta", "space", "conjectured", "bruteForce")


def cmd_threshold(args) -> int:
    reports = []
    for n in args.n:
        if args.brute:
            try:
                rep = analysis.brute_force_threshold(args.k, args.ell, n, args.budget)
            except analysis.BudgetExceeded as exc:
                sys.stderr.write(f"error: {exc}\n")
                return EXIT_CAP
        else:
            rep = analysis.threshold_report(args.k, args.ell, n)
        reports.append(rep)
    if args.csv:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for rep in reports:
            d = rep.to_dict()
            w.writerow({f: "" if d[f] is None else d[f] for f in CSV_FIELDS})
        sys.stdout.write(buf.getvalue())
        return 0
    if args.json:
        payload = reports[0].to_dict() if len(reports) == 1 else {"reports": [r.to_dict() for r in reports]}
        _emit(args, payload, "")
        return 0
    for rep in reports:
        sys.stdout.write(f"k={rep.k} ell={rep.ell} n={rep.n}\n"
                         f"  delta: {rep.delta} ({rep.delta_member.spec})\n"
                         f"  space: {rep.space}\n"
                         f"  conjectured: {rep.conjectured}\n")
        if rep.brute_force is not None:
            sys.stdout.write(f"  brute: {rep.brute_force} ({rep.nodes} nodes)\n")
    return 0


def cmd_bounds(args) -> int:
    k, ell = args.k, args.ell
    lower = analysis.cstar_space_lower(k, ell)
    upper = analysis.cstar_upper_KOT(k, ell)
    known = analysis.cstar_known(k, ell)
    payload = {"k": k, "ell": ell, "lower": str(lower), "upper": str(upper),
               "known": None if known is None else str(known)}
    text = (f"lower: {lower}\nupper: {upper}\n"
            f"known: {'unknown' if known is None else known}\n")
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(nm not in SUITES for nm in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = [run_suite(nm) for nm in names]
    payload = {"suites": [r.to_dict() for r in results],
               "passed": all(r.passed for r in results)}
    text = "".join(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checks} checks)\n"
                   + "".join(f"  {f}\n" for f in r.failures[:20]) for r in results)
    _emit(args, payload, text)
    return 0 if payload["passed"] else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = _Parser(prog="hypermatch", description="Exact perfect-matching lab for k-uniform hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="write a barrier, space barrier or random hypergraph")
    c.add_argument("kind", choices=["barrier", "space", "random", "complete"])
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    c.add_argument("a", type=int, nargs="?", help="|A| (barrier only)")
    c.add_argument("variant", nargs="?", choices=[ODD, EVEN], help="barrier only")
    c.add_argument("--p", type=_rational, help="edge probability (random only)")
    c.add_argument("--seed", type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("degree", parents=[common], help="minimum ell-degree with a witness")
    d.add_argument("--ell", type=int, required=True)
    d.add_argument("file")
    d.set_defaults(func=cmd_degree)

    m = sub.add_parser("match", parents=[common], help="perfect matching decision with witness")
    m.add_argument("file")
    m.set_defaults(func=cmd_match)

    f = sub.add_parser("fracmatch", parents=[common], help="exact fractional matching number with dual cover")
    f.add_argument("file")
    f.set_defaults(func=cmd_fracmatch)

    a = sub.add_parser("absorb", parents=[common], help="overlap statistics and absorbing-set counts")
    a.add_argument("file")
    a.add_argument("--x", type=int, required=True)
    a.add_argument("--y", type=int, required=True)
    a.add_argument("--gamma", type=_rational, default=analysis.DEFAULT_GAMMA)
    a.add_argument("--samples", type=int, help="estimate by sampling instead of exact enumeration")
    a.add_argument("--seed", type=int)
    a.set_defaults(func=cmd_absorb)

    cl = sub.add_parser("closeness", parents=[common], help="distance to the nearest balanced barrier")
    cl.add_argument("file")
    cl.add_argument("--variant", choices=[ODD, EVEN], required=True)
    cl.add_argument("--A", help="comma-separated class A (skips the bipartition search)")
    cl.set_defaults(func=cmd_closeness)

    t = sub.add_parser("threshold", parents=[common], help="threshold report for (k, ell, n)")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--ell", type=int, required=True)
    t.add_argument("--n", type=int, nargs="+", required=True)
    t.add_argument("--brute", action="store_true", help="also compute m_ell(k, n) exhaustively")
    t.add_argument("--budget", type=int, default=2_000_000, help="node limit for --brute")
    t.add_argument("--csv", action="store_true", help="emit a CSV table")
    t.set_defaults(func=cmd_threshold)

    b = sub.add_parser("bounds", parents=[common], help="c*_{k,ell} lower, upper and known values")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--ell", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", parents=[common], help="run a named invariant suite")
    v.add_argument("--suite", required=True, help=f"all, {', '.join(SUITES)}")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except matching.SizeCapError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (HypergraphFormatError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def run(argv=None) -> int:
    """Alias of :func:`main`."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
