"""Command-line front end.

Exit status: 0 success, 1 a check failed, 2 usage error, 3 malformed graph6.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable, Iterator

from . import constructors as C
from .classify import classify, is_ap, is_asc, is_self_centered, recognize_binocle, recognize_theta
from .enumeration import GenSpec, SpecError, enumerate_graphs, scan
from .graph import Graph, Graph6Error, GraphError, from_graph6, to_dot, to_graph6
from .metrics import (
    DisconnectedGraphError,
    blocks,
    ecc_profile,
    girth,
    independence_number,
    is_connected,
)
from .verify import CHECKS, FAIL, InfeasibleError, run_check, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


def _connected_and(pred: Callable[[Graph], bool]) -> Callable[[Graph], bool]:
    return lambda g: is_connected(g) and pred(g)


FILTERS: dict[str, Callable[[Graph], bool]] = {
    "asc": _connected_and(is_asc),
    "ap": _connected_and(is_ap),
    "self-centered": _connected_and(is_self_centered),
    "unicyclic": lambda g: is_connected(g) and g.m == g.n,
    "theta": _connected_and(lambda g: recognize_theta(g) is not None),
    "binocle": _connected_and(lambda g: recognize_binocle(g) is not None),
    "connected": is_connected,
}


def _top(g: Graph) -> int:
    degs = g.degrees()
    return degs.count(max(degs))


STATS: dict[str, Callable[[Graph], object]] = {
    "girth": girth,
    "alpha": independence_number,
    "size": lambda g: g.m,
    "max-degree": lambda g: max(g.degrees()),
    "top-count": _top,
    "radius": lambda g: ecc_profile(g).radius,
    "diameter": lambda g: ecc_profile(g).diameter,
}


# input ----------------------------------------------------------------------


def _read_graphs(sources: list[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield (line number, text, graph); ``-`` reads stdin line by line."""
    for src in sources:
        lines: Iterable[str] = sys.stdin if src == "-" else [src]
        for lineno, raw in enumerate(lines, 1):
            text = raw.rstrip("\n")
            if src == "-" and not text:
                continue
            try:
                g = from_graph6(text)
            except Graph6Error as exc:
                where = f"line {lineno}: " if src == "-" else ""
                raise ParseError(f"{where}{exc}") from None
            yield lineno, text, g


# output ---------------------------------------------------------------------


def _emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "graph6":
        print(to_graph6(g))
    elif fmt == "dot":
        sys.stdout.write(to_dot(g))
    elif fmt == "json":
        print(json.dumps({"graph6": to_graph6(g), "order": g.n, "size": g.m, "edges": g.edges()}))
    else:
        print(f"order {g.n}  size {g.m}  graph6 {to_graph6(g)}")
        for v in range(g.n):
            print(f"  {v}: {' '.join(map(str, g.neighbors(v)))}")


def _emit_record(rec: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rec))
    else:
        width = max(len(k) for k in rec)
        for k, v in rec.items():
            print(f"{k.ljust(width)}  {v}")


def _classification_record(text: str, g: Graph) -> dict:
    c = classify(g)
    return {
        "graph6": text,
        "self_centered": c.self_centered,
        "almost_self_centered": c.almost_self_centered,
        "almost_peripheral": c.almost_peripheral,
        "unicyclic": c.unicyclic,
        "theta": list(c.theta.as_tuple()) if c.theta else None,
        "binocle": ({"cycle_c": list(c.binocle.cycle_c), "cycle_d": list(c.binocle.cycle_d),
                     "path": list(c.binocle.path)} if c.binocle else None),
        "central": c.central_count,
        "peripheral": c.peripheral_count,
        "top_vertices": c.top_count,
    }


def _metrics_record(text: str, g: Graph) -> dict:
    prof = ecc_profile(g)
    degs = g.degrees()
    return {
        "graph6": text,
        "order": g.n,
        "size": g.m,
        "eccentricities": list(prof.ecc),
        "radius": prof.radius,
        "diameter": prof.diameter,
        "center": list(prof.center),
        "periphery": list(prof.periphery),
        "girth": girth(g),
        "independence_number": independence_number(g),
        "min_degree": min(degs),
        "max_degree": max(degs),
        "blocks": [list(b) for b in blocks(g).blocks],
    }


# subcommands -------------------------------------------------------------------


def cmd_construct(args) -> int:
    try:
        fam = C.FamilyId(args.family)
    except ValueError:
        raise UsageError(f"unknown family {args.family!r}; choose from "
                         f"{', '.join(f.value for f in C.FamilyId)}") from None
    try:
        g = C.build(fam, *args.params)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit_graph(g, args.format)
    return EXIT_OK


def _stream_filter(args, records: Callable[[str, Graph], dict] | None) -> int:
    pred = FILTERS[args.filter] if args.filter else None
    seen = kept = 0
    for _, text, g in _read_graphs(args.graphs):
        seen += 1
        if pred is not None:
            if pred(g):
                kept += 1
                print(text)
            continue
        try:
            _emit_record(records(text, g), args.format)
        except DisconnectedGraphError as exc:
            raise UsageError(f"{text}: {exc}") from None
    if pred is not None:
        print(f"{kept} of {seen} graphs matched filter {args.filter}", file=sys.stderr)
    return EXIT_OK


def cmd_classify(args) -> int:
    return _stream_filter(args, _classification_record)


def cmd_metrics(args) -> int:
    return _stream_filter(args, _metrics_record)


def _spec_from(args) -> GenSpec:
    if args.order is None:
        raise UsageError("--order is required")
    spec = GenSpec(order=args.order, regular=args.degree, min_size=args.min_size,
                   max_size=args.max_size, max_degree=args.max_degree, min_girth=args.min_girth)
    try:
        spec.validate()
    except SpecError as exc:
        raise UsageError(str(exc)) from None
    return spec


def cmd_enumerate(args) -> int:
    spec = _spec_from(args)
    pred = FILTERS[args.filter] if args.filter else None
    seen = kept = 0
    for g in enumerate_graphs(spec, jobs=args.jobs):
        seen += 1
        if pred is None or pred(g):
            kept += 1
            if args.format in ("graph6", "table"):
                print(to_graph6(g))
            else:
                _emit_graph(g, args.format)
    print(f"{kept} of {seen} graphs" + (f" matched filter {args.filter}" if pred else ""),
          file=sys.stderr)
    return EXIT_OK


def cmd_scan(args) -> int:
    spec = _spec_from(args)
    if not args.stat:
        raise UsageError("--stat is required")
    pred = FILTERS[args.filter] if args.filter else None
    res = scan(spec, pred, STATS[args.stat], args.objective, name=args.stat,
               cert_cap=args.cert_cap, jobs=args.jobs)
    _emit_record(res.to_dict(), "json" if args.format == "json" else "table")
    return EXIT_OK


def _check_params(args) -> dict:
    names = CHECKS[args.check_id][0]
    given = {"n": args.order, "r": args.radius, "k": args.degree, "a_max": args.a_max}
    missing = [n for n in names if given[n] is None]
    if missing:
        flags = {"n": "--order/--n", "r": "--radius/--r", "k": "--degree/--k", "a_max": "--a-max"}
        raise UsageError(f"{args.check_id} needs {', '.join(flags[m] for m in missing)}")
    return {n: given[n] for n in names}


def _emit_reports(reports, fmt: str, timing: bool) -> None:
    for r in reports:
        if fmt == "json":
            print(r.to_json(timing))
        else:
            claimed = json.dumps(r.claimed, sort_keys=False)
            computed = json.dumps(r.computed, sort_keys=False)
            params = ",".join(f"{k}={v}" for k, v in r.params.items())
            print(f"{r.status:<21} {r.check_id}({params})  claimed={claimed}  computed={computed}")


def cmd_verify(args) -> int:
    if args.check_id not in CHECKS:
        raise UsageError(f"unknown check {args.check_id!r}; choose from {', '.join(CHECKS)}")
    try:
        report = run_check(args.check_id, _check_params(args), jobs=args.jobs,
                           cert_cap=args.cert_cap, full=args.full)
    except InfeasibleError as exc:
        raise UsageError(str(exc)) from None
    _emit_reports([report], args.format, not args.no_timing)
    return EXIT_FAIL if report.status == FAIL else EXIT_OK


def cmd_suite(args) -> int:
    if args.max_n < 7:
        raise UsageError("--max-n must be at least 7")
    reports = run_suite(args.max_n, jobs=args.jobs, cert_cap=args.cert_cap)
    _emit_reports(reports, args.format, not args.no_timing)
    counts = summarize(reports)
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return EXIT_FAIL if counts[FAIL] else EXIT_OK


# parser ------------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ascap", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def fmt(sp, choices, default):
        sp.add_argument("--format", choices=choices, default=default, help=f"output format (default {default})")

    families = ", ".join(f"{f.value}({','.join(C.SIGNATURES[f])})" for f in C.FamilyId)
    sp = sub.add_parser("construct", help="build a named graph",
                        description=f"Build a named graph. Families and parameters: {families}. "
                                    "Domains: theta a,b,c >= 1 with at most one 1; cycle_pendant odd n >= 7; "
                                    "girth_extremal even n >= 12; Z r >= 2, n >= 2r+1; regular_asc k >= 4; "
                                    "ap_max_size n >= 3; ap_degree n >= 7 with delta in 3..n-4 or n-1; "
                                    "ap_top_extremal n >= 8.")
    sp.add_argument("family")
    sp.add_argument("params", nargs="*", type=int)
    fmt(sp, ["graph6", "dot", "json", "table"], "graph6")
    sp.set_defaults(func=cmd_construct)

    for name, func, what in (("classify", cmd_classify, "class membership (connected input)"),
                             ("metrics", cmd_metrics, "distance and degree invariants (connected input)")):
        sp = sub.add_parser(name, help=f"report {what}",
                            description=f"Report {what} for each graph6 input. With --filter, print "
                                        "only the input lines satisfying the predicate, in input "
                                        "order, and a count on stderr.")
        sp.add_argument("graphs", nargs="+", metavar="GRAPH6", help="graph6 string, or - for stdin lines")
        sp.add_argument("--filter", choices=sorted(FILTERS))
        fmt(sp, ["json", "table"], "table")
        sp.set_defaults(func=func)

    def gen_flags(sp):
        sp.add_argument("--order", type=int, help="number of vertices, 1..16")
        sp.add_argument("--degree", type=int, help="restrict to regular graphs of this degree")
        sp.add_argument("--max-degree", type=int)
        sp.add_argument("--min-size", type=int)
        sp.add_argument("--max-size", type=int)
        sp.add_argument("--min-girth", type=int, help="skip graphs with a shorter cycle")
        sp.add_argument("--filter", choices=sorted(FILTERS))
        sp.add_argument("--jobs", type=_positive, default=1)

    sp = sub.add_parser("enumerate", help="list connected graphs up to isomorphism",
                        description="Print one canonical graph6 line per isomorphism class of "
                                    "connected graphs satisfying the constraints (sorted).")
    gen_flags(sp)
    fmt(sp, ["graph6", "dot", "json", "table"], "graph6")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("scan", help="extremal value of a statistic over enumerated graphs")
    gen_flags(sp)
    sp.add_argument("--stat", choices=sorted(STATS))
    sp.add_argument("--objective", choices=["max", "min"], default="max")
    sp.add_argument("--cert-cap", type=int, default=1000, help="maximum certificates kept (default 1000)")
    fmt(sp, ["json", "table"], "json")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="run one check",
                        description="Run one check. Parameters: lemma1 n>=6, lemma2 n>=4, lemma3 a_max>=1, "
                                    "lemma4 n>=5, thm5 n>=5 (<=16), thm6 n,r with r>=2 and n>=2r+1 (n<=9), "
                                    "cor7 n>=5 (n<=9), thm8 k>=3, thm9 n>=3 (n<=9), thm10 n>=7 (n<=9), "
                                    "thm11 n>=8 (n<=9), invariant_sweep n>=1 (n<=9); --full allows n=10. "
                                    "Out-of-domain parameters give a skipped-out-of-range report.")
    sp.add_argument("check_id", help=", ".join(CHECKS))
    sp.add_argument("--order", "--n", dest="order", type=int)
    sp.add_argument("--radius", "--r", dest="radius", type=int)
    sp.add_argument("--degree", "--k", dest="degree", type=int)
    sp.add_argument("--a-max", dest="a_max", type=int)
    sp.add_argument("--full", action="store_true", help="allow the slow exhaustive order-10 route")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--cert-cap", type=int, default=1000)
    sp.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    fmt(sp, ["json", "table"], "table")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("suite", help="run every check within an order budget")
    sp.add_argument("--max-n", type=int, default=9, help="order budget, at least 7 (default 9)")
    sp.add_argument("--jobs", type=_positive, default=1, help="worker processes; output is identical for any value")
    sp.add_argument("--cert-cap", type=int, default=1000)
    sp.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    fmt(sp, ["json", "table"], "table")
    sp.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ascap: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, SpecError, ValueError) as exc:
        print(f"ascap: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
