"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 unparsable input,
3 a cap or budget was exceeded, 4 fast path and brute force disagree.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time
from typing import Sequence

from .autsearch import automorphism_group
from .cayley import build_ambient_cayley, build_cayley
from .corollaries import ambient_index, wreath_extension
from .engine import (
    DEFAULT_BRUTE_BUDGET,
    AutReport,
    Method,
    Unfactored,
    aut_bruteforce,
    aut_fast,
    bruteforce_with_certificate,
)
from .errors import CapExceeded, HypothesisViolated, InvalidParams
from .graph import format_edge_list
from .perms import DEFAULT_CAP
from .report import AnalysisReport, certificate_summary
from .suites import SUITES, run_suite
from .topologies import TopologySpec, make, parse_spec
from .transpositions import check_hypotheses, generated_order

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3, 4


def analyze(spec: TopologySpec, brute: bool = False, budget: int = DEFAULT_BRUTE_BUDGET,
            cap: int = DEFAULT_CAP) -> AnalysisReport:
    """Hypotheses, fast path, optional brute force and normality for one topology.

    CapExceeded from group enumeration propagates; a brute-force budget
    overrun is recorded as a refusal instead.
    """
    s = make(spec)
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    hyp = check_hypotheses(s)
    timings["hypotheses"] = time.perf_counter() - t0
    report = AnalysisReport(spec=str(spec), transpositions=str(s), hypotheses=hyp, timings=timings)

    ell = ambient_index(s, spec.ambient) if spec.ambient is not None else 1
    t0 = time.perf_counter()
    try:
        fast = aut_fast(s, cap)
        report.fast = wreath_extension(fast, ell)
    except HypothesisViolated as exc:
        report.fast_refusal = str(exc)
    timings["fast_path"] = time.perf_counter() - t0

    if not brute:
        report.certificate = certificate_summary(None, "fast_path" if report.fast else "none")
        return report
    t0 = time.perf_counter()
    try:
        if ell == 1:
            cg = build_cayley(s, cap)
            if cg.vertex_count > budget:
                raise CapExceeded(f"{cg.vertex_count} vertices exceeds brute-force budget {budget}")
            report.brute, cert = bruteforce_with_certificate(cg, budget)
            report.certificate = certificate_summary(cert, "brute_force")
        else:
            report.brute = _ambient_bruteforce(s, spec.ambient, budget, cap)
            report.certificate = certificate_summary(None, "brute_force")
    except CapExceeded as exc:
        report.brute_refusal = str(exc)
        report.certificate = certificate_summary(None, "fast_path" if report.fast else "none")
    timings["brute_force"] = time.perf_counter() - t0
    return report


def _ambient_bruteforce(s, n: int, budget: int, cap: int) -> AutReport:
    graph = build_ambient_cayley(s, n, cap)
    if graph.vertex_count > budget:
        raise CapExceeded(f"{graph.vertex_count} vertices exceeds brute-force budget {budget}")
    full = automorphism_group(graph)
    return AutReport(full.order, Unfactored(full.order), full.generators, None, Method.BRUTE_FORCE, None)


def cmd_analyze(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    try:
        report = analyze(spec, brute=args.brute, budget=args.budget, cap=args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(report.to_json(include_timings=not args.no_timings) if args.json else report.to_text())
    if report.match is False:
        print("error: fast path and brute force disagree", file=sys.stderr)
        return EXIT_MISMATCH
    if report.brute_refusal is not None:
        print(f"error: {report.brute_refusal}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, max_points=args.max_points, seed=args.seed,
                        samples=args.samples, budget=args.budget)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


_RANGE = re.compile(r"^(?P<head>.*?)(?P<lo>\d+)\.\.(?P<hi>\d+)$")


def expand_specs(items: Sequence[str]) -> list[str]:
    """Expand ``bubble:3..5`` into ``bubble:3``, ``bubble:4``, ``bubble:5``."""
    out = []
    for item in items:
        m = _RANGE.match(item)
        if m:
            out += [f"{m['head']}{i}" for i in range(int(m["lo"]), int(m["hi"]) + 1)]
        else:
            out.append(item)
    return out


def bench_rows(specs: Sequence[str], repetitions: int = 3,
               budget: int = DEFAULT_BRUTE_BUDGET) -> list[dict]:
    rows = []
    for text in expand_specs(specs):
        spec = parse_spec(text)
        s = make(spec)
        fast_t = brute_t = None
        for _ in range(repetitions):
            t0 = time.perf_counter()
            aut_fast(s)
            dt = time.perf_counter() - t0
            fast_t = dt if fast_t is None else min(fast_t, dt)
        vertices = generated_order(s)
        if vertices <= budget:
            for _ in range(repetitions):
                t0 = time.perf_counter()
                aut_bruteforce(build_cayley(s), budget)
                dt = time.perf_counter() - t0
                brute_t = dt if brute_t is None else min(brute_t, dt)
        rows.append({
            "spec": text,
            "family": spec.family,
            "vertices": vertices,
            "fast_seconds": fast_t,
            "brute_seconds": brute_t,
            "speedup": None if brute_t is None else brute_t / fast_t,
        })
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    rows = bench_rows(args.specs, args.repetitions, args.budget)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["spec", "family", "vertices", "fast_seconds", "brute_seconds", "speedup"])
    for r in rows:
        writer.writerow([
            r["spec"], r["family"], r["vertices"], f"{r['fast_seconds']:.6f}",
            "skipped" if r["brute_seconds"] is None else f"{r['brute_seconds']:.6f}",
            "" if r["speedup"] is None else f"{r['speedup']:.2f}",
        ])
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    sys.stdout.write(format_edge_list(make(parse_spec(args.spec)).to_edges()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleyaut",
        description="Automorphism groups of Cayley graphs generated by transpositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="compute Aut(Cay(H,S)) for one topology")
    p.add_argument("spec", help="e.g. hypercube:3, extcube:2x3, mbs:5, star:5, bubble:4, custom:1-2,2-3")
    p.add_argument("--brute", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--budget", type=int, default=DEFAULT_BRUTE_BUDGET, help="brute-force vertex budget")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="group enumeration cap")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--no-timings", action="store_true", help="omit timings from JSON output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max-points", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--budget", type=int, default=DEFAULT_BRUTE_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the fast path against brute force")
    p.add_argument("specs", nargs="+", help="topology specs; ranges like bubble:3..5 allowed")
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--budget", type=int, default=DEFAULT_BRUTE_BUDGET)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="print the transposition set as an edge list")
    p.add_argument("spec")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
