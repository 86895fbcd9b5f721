"""``cluster-forge`` command line.

Exit codes: 0 success, 1 a verification suite failed, 2 bad input or a size
cap was hit.  Reports go to stdout and are byte-for-byte reproducible; timing
goes to stderr.  Positions of conjugates and points in orderings and
generating sets are printed 1-based.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import constructions as C
from . import invariants as I
from . import triplets as T
from .errors import ClusterForgeError, SizeLimitError, UsageError
from .group_core import ELEMENT_CAP, pointwise_stabilizer, subgroup_from_elements
from .groupspec import parse_spec
from .suites import DEFAULT_SEED, SUITES, run_suite

SEARCH_HEADER = ["group", "h1_order", "h2_order", "a", "b", "c", "solvable"]


def _render(rows_or_obj, fmt, header=None):
    if fmt == "json":
        return json.dumps(rows_or_obj, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header is not None:
        w.writerow(header)
    for row in rows_or_obj:
        w.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _cell(x):
    if isinstance(x, bool):
        return str(x).lower()
    if x is None:
        return ""
    if isinstance(x, (list, tuple)):
        return " ".join(str(_cell(y)) for y in x)
    return x


def _dict_csv(d: dict):
    return [list(d.values())], list(d.keys())


def _model(args):
    m = parse_spec(args.spec).model
    if m.table.order > args.cap:
        raise SizeLimitError(f"group order {m.table.order} exceeds --cap {args.cap}")
    return m


def _triplet_arg(text: str) -> tuple[int, int, int]:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"triplet must look like a,b,c (got {text!r})") from None
    if len(parts) != 3 or min(parts) < 1:
        raise UsageError(f"triplet must be three positive integers (got {text!r})")
    return parts[0], parts[1], parts[2]


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers (got {text!r})") from None


def _selector(model, text: str):
    kind, _, rest = text.partition(":")
    G = model.table
    if kind == "zeta":
        vals = _int_list(rest, "zeta selector")
        if len(vals) != 1:
            raise UsageError("zeta selector takes one divisor l")
        return C.holomorph_sub_M(model, vals[0])
    if kind == "stab":
        if G.realization.kind != "permutation":
            raise UsageError("stab selector needs a permutation group")
        pts = _int_list(rest, "stab selector")
        degree = G.realization.degree
        if not pts or any(not 0 <= p < degree for p in pts):
            raise UsageError(f"stab points must lie in 0..{degree - 1}")
        return pointwise_stabilizer(G, pts)
    if kind == "elts":
        try:
            data = json.loads(Path(rest).read_text())
            elements = [_tupled(e) for e in data["elements"]]
        except FileNotFoundError:
            raise UsageError(f"no such file {rest!r}") from None
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad element file ({exc})") from None
        return subgroup_from_elements(G, elements)
    raise UsageError(f"unknown selector {text!r} (use zeta:l, stab:i,j,... or elts:path)")


def _tupled(x):
    return tuple(_tupled(y) for y in x) if isinstance(x, list) else x


def cmd_invariants(args):
    d = {"spec": args.spec, **I.invariant_report(_model(args)).as_dict()}
    if args.format == "csv":
        rows, header = _dict_csv(d)
        return _render(rows, "csv", header), 0
    return _render(d, "json"), 0


def cmd_rho_tau(args):
    m = _model(args)
    U = _selector(m, args.selector)
    rep = I.invariant_report(m)
    d = {
        "spec": args.spec,
        "selector": args.selector,
        "subgroup_order": U.order,
        "rho": I.root_capacity(m, U),
        "tau": I.intersection_indicium(m, U),
        "degree": rep.degree,
        "cluster_size": rep.cluster_size,
        "num_clusters": rep.num_clusters,
        "ascending_index": rep.ascending_index,
    }
    if args.format == "csv":
        rows, header = _dict_csv(d)
        return _render(rows, "csv", header), 0
    return _render(d, "json"), 0


def cmd_tower(args):
    m = _model(args)
    if args.ordering is not None:
        if args.all:
            raise UsageError("--ordering and --all are mutually exclusive")
        order = [i - 1 for i in _int_list(args.ordering, "ordering")]
        prof = I.cluster_tower(m, order)
        d = {"spec": args.spec, "ordering": [i + 1 for i in prof.ordering],
             "length": prof.length, "degrees": list(prof.degrees)}
        if args.format == "csv":
            rows, header = _dict_csv(d)
            return _render(rows, "csv", header), 0
        return _render(d, "json"), 0
    if args.max < 1:
        raise UsageError("--max must be positive")
    profs = I.tower_profiles(m, max_orderings=args.max, seed=args.seed)
    d = {"spec": args.spec, "num_clusters": len(I.conjugates(m)), **profs.as_dict()}
    if args.format == "csv":
        rows = [[args.spec, l, deg, profs.exhaustive] for l, deg in profs.profiles]
        return _render(rows, "csv", ["spec", "length", "degrees", "exhaustive"]), 0
    return _render(d, "json"), 0


def cmd_mingen(args):
    m = _model(args)
    rep = I.minimal_generating_sets(m, args.max_card)
    d = {"spec": args.spec, **rep.as_dict(one_based=True)}
    if args.format == "csv":
        rows = [[args.spec, len(b), list(b)] for b in d["sets"]]
        return _render(rows, "csv", ["spec", "cardinality", "set"]), 0
    return _render(d, "json"), 0


def cmd_triplet(args):
    d = T.classify(*_triplet_arg(args.triplet)).as_dict()
    if args.format == "csv":
        d = dict(d, factorizations=[f"{x}*{y}" for x, y in d["factorizations"]])
        rows, header = _dict_csv(d)
        return _render(rows, "csv", header), 0
    return _render(d, "json"), 0


def cmd_search(args):
    m = _model(args)
    target = _triplet_arg(args.triplet)
    found = T.search_realizations(m.table, target, args.spec, up_to_conjugacy=args.up_to_conjugacy)
    if args.format == "json":
        out = [dict(zip(SEARCH_HEADER, w.row()), solvable=w.solvable, **T.feasibility_flags(w)) for w in found]
        return _render(out, "json"), 0
    return _render([w.row() for w in found], "csv", SEARCH_HEADER), 0


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    results = []
    for name in names:
        res = run_suite(name, seed=args.seed)
        print(f"{name}: {'pass' if res.passed else 'FAIL'} in {res.elapsed:.2f}s", file=sys.stderr)
        results.append(res)
    passed = all(r.passed for r in results)
    if args.format == "csv":
        rows = [[r.suite, c.claim, c.anchor, c.passed, c.details] for r in results for c in r.checks]
        text = _render(rows, "csv", ["suite", "claim", "anchor", "passed", "details"])
    else:
        text = _render({"passed": passed, "seed": args.seed, "suites": [r.as_dict() for r in results]}, "json")
    return text, 0 if passed else 1


def _globals(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("json", "csv"), default=default,
                        help="output format (default json; csv for search)")
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS if suppress else DEFAULT_SEED,
                        help="seed for sampled checks and orderings")
    parser.add_argument("--cap", type=int, default=argparse.SUPPRESS if suppress else ELEMENT_CAP,
                        help="largest group order accepted")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cluster-forge", description="Cluster invariants of finite extension models.")
    _globals(parser, False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="degree, r, s, t, u of a model")
    p.add_argument("spec")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("rho-tau", parents=[common], help="root capacity and intersection indicium of a subgroup")
    p.add_argument("spec")
    p.add_argument("selector", help="zeta:l, stab:i,j,... (0-based points) or elts:path")
    p.set_defaults(func=cmd_rho_tau)

    p = sub.add_parser("tower", parents=[common], help="cluster tower profiles")
    p.add_argument("spec")
    p.add_argument("--ordering", help="1-based order of the conjugates, e.g. 2,1,3")
    p.add_argument("--all", action="store_true", help="all orderings (the default)")
    p.add_argument("--max", type=int, default=40320, help="largest number of orderings to visit")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("mingen", parents=[common], help="minimal generating sets of conjugates")
    p.add_argument("spec")
    p.add_argument("--max-card", type=int, default=None)
    p.set_defaults(func=cmd_mingen)

    p = sub.add_parser("triplet", parents=[common], help="classify a degree triplet a,b,c")
    p.add_argument("triplet")
    p.set_defaults(func=cmd_triplet)

    p = sub.add_parser("search", parents=[common], help="subgroup pairs realizing a triplet")
    p.add_argument("spec")
    p.add_argument("triplet")
    p.add_argument("--up-to-conjugacy", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)} or all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "search" else "json"
    start = time.perf_counter()
    try:
        text, code = args.func(args)
    except ClusterForgeError as exc:
        print(f"cluster-forge: error: {exc}", file=sys.stderr)
        return 2
    try:
        sys.stdout.write(text)
        sys.stdout.flush()
    except BrokenPipeError:
        sys.stdout = None
        return code
    print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
