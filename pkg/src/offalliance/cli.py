"""Command-line interface.

Exit codes: 0 success, 1 domain/hypothesis error or bound violation,
2 parse/usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators
from .alliance import AllianceKind, check_alliance
from .bounds import evaluate_all_bounds, tightness_survey, violations
from .errors import AllianceError, CapacityError, InputError
from .io import build_report, dump_report, format_edge_list, load_report, parse_edge_list

EXIT_DOMAIN, EXIT_USAGE, EXIT_CAPACITY = 1, 2, 3


def _read_graph(args):
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        text = Path(args.file).read_text()
    return parse_edge_list(text, one_indexed=args.one_indexed)


def _shift(vertices, args) -> list[int]:
    return [v + (1 if args.one_indexed else 0) for v in sorted(vertices)]


def _number(token: str) -> int | float:
    try:
        return int(token)
    except ValueError:
        return float(token)


def cmd_gen(args) -> int:
    params = [_number(p) for p in args.params]
    if args.family in ("gnp", "connected_gnp", "regular"):
        if args.seed is None:
            raise InputError(f"{args.family} needs --seed")
        g = generators.GraphSpec(args.family, tuple(params), args.seed).build()
    else:
        if any(isinstance(p, float) for p in params):
            raise InputError(f"{args.family} parameters must be integers")
        g = generators.named(args.family, *params)
    sys.stdout.write(format_edge_list(g, one_indexed=args.one_indexed))
    return 0


def cmd_solve(args) -> int:
    from .solvers import min_alliance, min_connected_alliance

    g = _read_graph(args)
    kind = AllianceKind.parse(args.kind)
    res = min_connected_alliance(g, kind) if args.connected else min_alliance(g, kind)
    witness = _shift(res.witness, args)
    if args.json:
        out = res.to_dict() | {"witness": witness, "nodes_explored": res.nodes_explored}
        print(json.dumps(out, indent=2))
    else:
        label = ("connected " if args.connected else "") + kind.value
        print(f"{label}: {res.value}")
        print("witness: " + " ".join(map(str, witness)))
    return 0


def cmd_check(args) -> int:
    g = _read_graph(args)
    shift = 1 if args.one_indexed else 0
    try:
        members = [int(t) - shift for t in args.set.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"malformed --set {args.set!r}") from None
    cert = check_alliance(g, members, args.kind)
    out = cert.to_dict()
    out["set"] = _shift(cert.set, args)
    if out["violator"] is not None:
        out["violator"]["vertex"] += shift
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print(f"{cert.kind.value} {out['set']}: {'satisfied' if cert.satisfied else 'violated'}")
        if cert.violator is not None:
            v = out["violator"]
            print(f"violator {v['vertex']}: |N_S|={v['inside']} |N_out|={v['outside']}")
    return 0


def cmd_bounds(args) -> int:
    g = _read_graph(args)
    doc = build_report(g)
    sys.stdout.write(dump_report(doc))
    if args.plot:
        from .bounds import BoundRecord
        from .plotting import plot_bound_records

        recs = [BoundRecord(**r) for r in doc["bounds"]]
        plot_bound_records(recs, args.plot, title=f"n={g.n}, m={g.m}")
    bad = [r for r in doc["bounds"] if r["holds"] is False]
    for r in bad:
        print(f"VIOLATION {r['id']}: bound {r['bound_value']} vs exact {r['exact_value']}",
              file=sys.stderr)
    return EXIT_DOMAIN if bad else 0


def cmd_verify(args) -> int:
    doc = load_report(Path(args.report).read_text())
    print(f"ok: {len(doc['bounds'])} bound records, "
          f"{sum(v is not None for v in doc['alliances'].values())} witnesses re-verified")
    return 0


def _parse_seeds(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1) if sep else range(int(lo), int(lo) + 1)
    except ValueError:
        raise InputError(f"malformed --seeds {text!r}; use a..b") from None


def ensemble_from_spec(spec: str, seeds: range):
    """``labeled:N``, ``named``, ``connected:NMIN-NMAX``, ``gnp:N:P``,
    ``connected_gnp:N:P`` or ``regular:N:D``."""
    head, *rest = spec.split(":")
    if head == "named":
        return generators.extremal_graphs()
    if head == "labeled" and len(rest) == 1:
        n = int(rest[0])
        return ((f"labeled({n})#{i}", g) for i, g in enumerate(generators.labeled_graphs(n)))
    if head == "connected" and len(rest) == 1:
        lo, _, hi = rest[0].partition("-")
        return generators.random_connected_ensemble(seeds, int(lo), int(hi or lo))
    if head in ("gnp", "connected_gnp", "regular") and len(rest) == 2:
        params = tuple(_number(x) for x in rest)
        return ((f"{head}{params}#seed={s}", generators.GraphSpec(head, params, s).build())
                for s in seeds)
    raise InputError(f"unknown ensemble spec {spec!r}")


def cmd_survey(args) -> int:
    ids = args.bounds.split(",") if args.bounds else None
    rows = tightness_survey(ensemble_from_spec(args.ensemble, _parse_seeds(args.seeds)), ids)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=2))
    else:
        header = f"{'bound':<10}{'graphs':>8}{'holds':>8}{'tight':>8}{'n/a':>8}{'unavail':>9}{'VIOL':>6}  smallest tight"
        print(header)
        for r in rows:
            where = r.smallest_tight_label or "-"
            print(f"{r.id:<10}{r.graphs:>8}{r.holds:>8}{r.tight:>8}{r.not_applicable:>8}"
                  f"{r.not_evaluable:>9}{r.violated:>6}  {where}")
    if args.plot:
        from .plotting import plot_survey

        plot_survey(rows, args.plot, title=f"tightness survey: {args.ensemble}")
    return EXIT_DOMAIN if any(r.violated for r in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="offalliance",
                                 description="Offensive alliance numbers and their bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("file", nargs="?", help="edge-list file (default: stdin)")
        p.add_argument("--one-indexed", action="store_true",
                       help="vertices in files and output are numbered from 1")

    kinds = [k.value for k in AllianceKind]

    p = sub.add_parser("gen", help="print a named or random graph as an edge list")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--one-indexed", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="exact alliance number with witness")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--connected", action="store_true",
                   help="require the alliance to induce a connected subgraph")
    p.add_argument("--json", action="store_true")
    graph_input(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="test a vertex set against an alliance predicate")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--set", required=True, help="comma-separated vertices, e.g. 1,3,5")
    p.add_argument("--json", action="store_true")
    graph_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="JSON report with the full bound catalog")
    p.add_argument("--plot", metavar="PATH", help="also render bound-vs-exact figure")
    graph_input(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("survey", help="tightness survey over an ensemble")
    p.add_argument("--ensemble", required=True,
                   help="labeled:N | named | connected:6-12 | gnp:N:P | connected_gnp:N:P | regular:N:D")
    p.add_argument("--seeds", default="0..0", help="inclusive seed range a..b")
    p.add_argument("--bounds", help="comma-separated catalog ids (L9 selects all L9(k=..))")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH", help="also render stacked outcome figure")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="schema-check a report and re-verify its witnesses")
    p.add_argument("report")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AllianceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
