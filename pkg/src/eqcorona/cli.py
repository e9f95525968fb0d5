"""Command line entry point: gen, color, oracle, verify, survey."""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import oracle
from .colorers.certificate import Certificate
from .colorers.dispatch import NoRoute, dispatch
from .colorers.shapes import ShapeError, shape_from_kind
from .corona import DEFAULT_MAX_ORDER, CoronaSpec, corona_power, labels
from .graph import ColoringError, Graph, GraphError, graph_family
from .io import coloring_to_json, format_dimacs, read_coloring, read_dimacs
from .verifier import bundled_suite, check_ecc, rows_to_csv, survey_table, verify_certificate

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_graph(src: str) -> Graph:
    """DIMACS file, or a family spec such as ``cycle:5`` or ``multipartite:2,3``."""
    p = Path(src)
    if p.exists():
        return read_dimacs(p)
    if ":" in src:
        kind, _, arg = src.partition(":")
        if kind in ("multipartite", "complete_multipartite"):
            return graph_family(kind, [int(x) for x in arg.split(",") if x])
        return graph_family(kind, int(arg))
    raise UsageError(f"no such graph file: {src}")


def _dump(obj, out) -> None:
    json.dump(obj, out, sort_keys=False)
    out.write("\n")


def _write(text: str, dest: str | None) -> None:
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def cmd_gen(args) -> int:
    G = load_graph(args.g)
    shape = shape_from_kind(args.h_kind, args.h_size)
    spec = CoronaSpec(G, shape.graph(), args.l)
    product = corona_power(spec, max_order=args.max_order)
    comments = [f"corona G o^{args.l} H, n={G.n}, m={spec.m}, order={product.n}"]
    _write(format_dimacs(product, comments), args.out)
    if args.labels:
        side = {str(v + 1): list(lab) for v, lab in enumerate(labels(spec))}
        Path(args.labels).write_text(json.dumps(side) + "\n")
    return EXIT_OK


def cmd_color(args) -> int:
    G = load_graph(args.g)
    shape = shape_from_kind(args.h_kind, args.h_size)
    given = [read_coloring(args.g_coloring)] if args.g_coloring else []
    cert = dispatch(G, given, shape, args.l, use_oracle=not args.no_oracle,
                    limit=args.limit, timeout=args.timeout_s)
    cert.check()
    _write(json.dumps(cert.to_json()) + "\n", args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_graph(args.graph)
    limit = args.limit
    if args.chi_eq:
        k, wit = oracle.equitable_coloring_min(g, limit=limit, timeout=args.timeout_s)
        _dump({"chi_eq": k, "witness": coloring_to_json(wit)}, sys.stdout)
        return EXIT_OK
    if args.k is None:
        raise UsageError("oracle needs --k or --chi-eq")
    res = oracle.is_equitably_k_colorable(g, args.k, limit=limit, timeout=args.timeout_s)
    _dump({"k": args.k, "colorable": res.colorable,
           "witness": coloring_to_json(res.witness) if res.witness else None,
           "nodes": res.nodes}, sys.stdout)
    return EXIT_OK if res.colorable else EXIT_MISMATCH


def cmd_verify(args) -> int:
    cert = Certificate.from_json(json.loads(Path(args.cert).read_text()))
    if args.g is not None:
        G = load_graph(args.g)
        if G != cert.spec.G:
            raise UsageError("--g does not match the graph recorded in the certificate")
    product = read_dimacs(args.product) if args.product else corona_power(cert.spec)
    rep = verify_certificate(product, cert, limit=args.limit, timeout=args.timeout_s)
    ecc = check_ecc(product, cert.claimed_k) if product.is_connected() else None
    if args.json:
        out = rep.to_json()
        out["ecc"] = ecc
        _dump(out, sys.stdout)
    else:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status} {cert.theorem} {cert.claim} k={cert.claimed_k} sizes={list(rep.sizes)} "
              f"lower_bound={rep.lower_bound} ecc={ecc}")
        for msg in rep.messages:
            print(f"  {msg}")
    return EXIT_OK if rep.passed and ecc is not False else EXIT_MISMATCH


def cmd_survey(args) -> int:
    rows = survey_table(bundled_suite(), jobs=args.jobs, limit=args.limit, timeout=args.timeout_s)
    if args.csv:
        Path(args.csv).write_text(rows_to_csv(rows))
    if args.json_out:
        Path(args.json_out).write_text(json.dumps(rows, indent=1) + "\n")
    if args.json:
        _dump(rows, sys.stdout)
    elif not args.csv:
        sys.stdout.write(rows_to_csv(rows))
    bad = [r for r in rows if not r["match"]]
    print(f"{len(rows) - len(bad)}/{len(rows)} rows match", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def _h_args(p) -> None:
    p.add_argument("--g", required=True, help="DIMACS file or family spec like cycle:5")
    p.add_argument("--h-kind", required=True, choices=["complete", "cycle", "path", "multipartite"])
    p.add_argument("--h-size", required=True, help="order of H; comma list for multipartite")
    p.add_argument("--l", type=int, default=1)


def _search_args(p) -> None:
    p.add_argument("--limit", type=int, default=None, help="oracle vertex limit (env COLORER_LIMIT)")
    p.add_argument("--timeout-s", type=float, default=oracle.DEFAULT_TIMEOUT)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eqcorona", description=__doc__)
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized tie-breaking")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="emit G o^l H as DIMACS")
    _h_args(p)
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--labels", help="write index -> corona label JSON here")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="equitable coloring certificate for G o^l H")
    _h_args(p)
    p.add_argument("--g-coloring", help="JSON {k, colors} coloring of G")
    p.add_argument("--no-oracle", action="store_true", help="never search for colorings of G")
    p.add_argument("--out")
    _search_args(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("oracle", help="exact equitable colorability")
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--chi-eq", action="store_true")
    _search_args(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--product", help="DIMACS of the product; rebuilt from the certificate otherwise")
    p.add_argument("--g", help="graph G the certificate must refer to")
    _search_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="reproduce the value table on the bundled suite")
    p.add_argument("--csv")
    p.add_argument("--json-out", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    _search_args(p)
    p.set_defaults(func=cmd_survey)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    random.seed(args.seed)
    try:
        return args.func(args)
    except (UsageError, ShapeError, GraphError, ColoringError, OSError, json.JSONDecodeError) as exc:
        print(f"eqcorona: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoRoute, oracle.OracleError) as exc:
        print(f"eqcorona: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
