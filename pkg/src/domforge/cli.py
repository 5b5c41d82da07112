"""Command-line entry point.

Exit codes: 0 when every assertion held (or an exploration finished),
1 when an asserted sweep found a counterexample or mismatch, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import dompoly
from .dompoly import compute, eval_pair
from .errors import GraphError, GuardExceeded
from .formats import from_graph6, iter_graph6_file, poly_to_json, rational_to_json, read_edge_list
from .graph import Graph, has_isolated, is_forest
from .reports import rows_to_csv
from .verify import (
    check_bound,
    default_workers,
    edge_removal_sweep,
    general_bound_sweep,
    graph_row,
    kn_min_sweep,
    lemma_suites,
    rows_report,
    forest_rows,
    star_min_sweep,
)

CONJECTURES = ("edge-any", "edge-nonpendant", "general-bound", "kn-min", "star-min")


def _approx(q: Fraction, digits: int = 6) -> str:
    return f"{q.numerator / q.denominator:.{digits}f}"


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(payload)


def _load_graph(args) -> Graph:
    sources = [s for s in (args.input, args.graph6) if s is not None]
    if len(sources) != 1:
        raise GraphError("give exactly one of --input or --graph6")
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    return read_edge_list(args.input)


def _poly(G: Graph, args):
    return compute(G, guard=args.brute_guard)


def cmd_poly(args) -> int:
    G = _load_graph(args)
    coeffs = poly_to_json(_poly(G, args), G.order)
    if args.output == "json":
        _emit(coeffs, "json")
    elif args.output == "csv":
        print("k,d_k")
        for k, c in enumerate(coeffs):
            print(f"{k},{c}")
    else:
        print("[" + ",".join(coeffs) + "]")
    return 0


def cmd_avd(args) -> int:
    G = _load_graph(args)
    e = eval_pair(_poly(G, args))
    q = Fraction(e.dp1, e.d1)
    if args.output == "json":
        _emit({"avd": rational_to_json(q), "approx": _approx(q), "D1": str(e.d1), "Dp1": str(e.dp1)}, "json")
    else:
        print(f"{q.numerator}/{q.denominator}")
        print(f"~{_approx(q)} (approximate)")
    return 0


def cmd_gamma(args) -> int:
    G = _load_graph(args)
    g = _poly(G, args).lowest_index()
    _emit({"gamma": g} if args.output == "json" else g, args.output)
    return 0


def cmd_check(args) -> int:
    G = _load_graph(args)
    if not is_forest(G) or has_isolated(G):
        print(
            "warning: graph is not a forest without isolated vertices; the forest bound "
            "is not guaranteed, reporting the comparison anyway",
            file=sys.stderr,
        )
    poly = lambda H: _poly(H, args)  # noqa: E731
    if args.output == "csv":
        print(rows_to_csv([graph_row(G, poly)]), end="")
        return 0
    rep = check_bound(G, poly)
    if args.output == "json":
        _emit(rep.to_dict(), "json")
    else:
        print(f"n={rep.n} 3D'(1)={rep.lhs} 2nD(1)={rep.rhs} status={rep.status} "
              f"avd={rep.avd.numerator}/{rep.avd.denominator} extremal_shape={str(rep.extremal_shape).lower()}")
    return 0


def _graph6_file_rows(path: str):
    by_n: dict[int, list] = {}
    for G in iter_graph6_file(path):
        by_n.setdefault(G.order, []).append(graph_row(G))
    return by_n


def cmd_sweep(args) -> int:
    if args.family in ("forests", "forests-no-isolated"):
        if args.max_n is None:
            raise GraphError("sweep needs --max-n")
        lo = args.min_n if args.min_n is not None else 2
        if not 2 <= lo <= args.max_n <= 16:
            raise GuardExceeded(f"forest sweep needs 2 <= n <= 16, got {lo}..{args.max_n}")
        per_n = {n: forest_rows(n, args.workers) for n in range(lo, args.max_n + 1)}
        family = "forests-no-isolated"
    elif args.family == "graph6-file":
        if args.input is None:
            raise GraphError("--family graph6-file needs --input <path>")
        per_n = {n: sorted(rows, key=lambda r: r.code) for n, rows in sorted(_graph6_file_rows(args.input).items())}
        family = f"graph6:{args.input}"
    else:
        raise GraphError(f"unknown family {args.family!r}")

    reports = [rows_report(family, n, rows) for n, rows in per_n.items()]
    if args.output == "csv":
        print(rows_to_csv([r for rows in per_n.values() for r in rows]), end="")
    else:
        if args.output == "json":
            _emit([r.to_dict(timing=not args.no_timing) for r in reports], "json")
        else:
            for r in reports:
                print(f"n={r.n:2d} total={r.total:6d} equality={len(r.equality_cases):5d} "
                      f"violations={len(r.violations)} mismatches={len(r.mismatches)}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_lemmas(args) -> int:
    suites = lemma_suites(args.max_n if args.max_n is not None else 10)
    if args.output == "json":
        _emit(suites, "json")
    else:
        for s in suites:
            print(f"{s['suite']:34s} checked={s['checked']:7d} gated={s['gated']:5d} failures={len(s['failures'])}")
    return 0 if all(not s["failures"] for s in suites) else 1


def cmd_explore(args) -> int:
    if args.output == "csv":
        raise GraphError("csv output is not available for explore")
    timing = not args.no_timing
    n = args.n
    if args.conjecture == "star-min":
        top = args.max_n if args.max_n is not None else n
        if top is None:
            raise GraphError("star-min needs --max-n or --n")
        reports = star_min_sweep(top, n_min=args.min_n or 2)
        payload = [r.to_dict(timing) for r in reports]
        ok = all(r.passed for r in reports)
    else:
        if n is None:
            raise GraphError(f"{args.conjecture} needs --n")
        if args.conjecture in ("edge-any", "edge-nonpendant"):
            mode = "any-edge" if args.conjecture == "edge-any" else "non-pendant-edge"
            rep = edge_removal_sweep(n, mode, args.workers)
            payload = rep.to_dict(timing)
            # the non-pendant question is open: findings are evidence, not failures
            ok = mode == "non-pendant-edge" or not rep.counterexamples
        elif args.conjecture == "general-bound":
            rep = general_bound_sweep(n, args.workers, allow_long=args.long)
            payload = rep.to_dict(timing)
            ok = rep.passed
        else:
            rep = kn_min_sweep(n, args.workers)
            payload = rep.to_dict(timing)
            ok = rep.passed
    if args.output == "json":
        _emit(payload, "json")
    else:
        items = payload if isinstance(payload, list) else [payload]
        for p in items:
            found = p.get("counterexamples", p.get("violations"))
            tested = p.get("tested", p.get("total"))
            print(f"{args.conjecture} n={p['n']} tested={tested} findings={len(found)}")
            for f in found:
                print(f"  {f['code'] + ' ' + f['graph6'] if isinstance(f, dict) else f}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file (or graph6 list for --family graph6-file)")
    common.add_argument("--graph6", help="graph6 string")
    common.add_argument("--output", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--workers", type=int, default=None, help="worker processes (default $DOMFORGE_WORKERS or 1)")
    common.add_argument("--brute-guard", type=int, default=dompoly.BRUTE_GUARD)
    common.add_argument("--no-timing", action="store_true", help="omit elapsed_ms so reports are byte-identical")

    p = argparse.ArgumentParser(prog="domforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, help_ in (
        ("poly", cmd_poly, "print the domination polynomial"),
        ("avd", cmd_avd, "print the average order of a dominating set"),
        ("gamma", cmd_gamma, "print the domination number"),
        ("check", cmd_check, "compare 3D'(1) with 2nD(1)"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("sweep", parents=[common], help="bound and equality sweep over a family")
    sp.add_argument("--family", default="forests", choices=("forests", "forests-no-isolated", "graph6-file"))
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--min-n", type=int)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("lemmas", parents=[common], help="run the identity and lemma suites")
    sp.add_argument("--max-n", type=int)
    sp.set_defaults(func=cmd_lemmas)

    sp = sub.add_parser("explore", parents=[common], help="conjecture sweeps over small graphs")
    sp.add_argument("--conjecture", required=True, choices=CONJECTURES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--min-n", type=int)
    sp.add_argument("--long", action="store_true", help="allow the n = 8 general-bound sweep")
    sp.set_defaults(func=cmd_explore)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.workers is None:
        args.workers = default_workers()
    if args.workers < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (GraphError, GuardExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
