"""Command-line front end.

Subcommands::

    gen        generate slim graphs up to isomorphism (graph6/text/dot)
    recognize  decide line-graph membership for graph6 input lines
    covers     enumerate strict covers up to equivalence
    sums       enumerate compositions F (+) K for a fat graph F
    spectral   certified smallest-eigenvalue intervals and threshold side
    catalog    build the minimal-forbidden-subgraph catalog directory
    screen     decide membership by forbidden-subgraph containment
    verify     run one of the published-claim checkers

Outputs are newline-delimited JSON records unless ``--pretty`` selects
indented documents.  Exit codes: 0 success, 1 refuted verification,
2 usage error.  The catalog directory may also be set through the
``HOFFLINE_CATALOG`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import HoffmanGraph, HoffmanGraphError, canonical_form
from .enumeration import (
    all_slim_graphs,
    connected_slim_graphs,
    enumerate_sums,
    parse_graph6,
    write_graph6,
)
from .recognition import enumerate_strict_covers, is_h_line
from .spectral import compare_threshold, equals_threshold, smallest_eigenvalue
from .verify import MfsCatalog, build_catalog, screen, verify_claim

CLAIMS = (
    "eq2",
    "prop2.1",
    "table1",
    "lemma4.10",
    "lemma4.11",
    "lemma4.12",
    "uniqueness",
    "eigen",
)


def _emit(doc, pretty):
    print(json.dumps(doc, indent=2 if pretty else None, sort_keys=True))


def _stdin_graphs(args):
    for line in sys.stdin:
        if line.strip():
            yield parse_graph6(line)


def _load_or_build_catalog(args, need=8):
    """An existing catalog directory is used as-is (operations raise when
    it is too shallow for an input); otherwise one is built and, when a
    path was named, persisted there."""
    path = args.catalog or os.environ.get("HOFFLINE_CATALOG")
    if path and os.path.exists(os.path.join(path, "catalog.json")):
        return MfsCatalog.load(path)
    nmax = max(getattr(args, "nmax", None) or need, need)
    cat = build_catalog(nmax, jobs=args.jobs, progress=lambda m: print(m, file=sys.stderr))
    if path:
        cat.save(path)
        print(f"catalog saved to {path}", file=sys.stderr)
    return cat


def _cmd_gen(args):
    stream = connected_slim_graphs(args.n) if not args.all else all_slim_graphs(args.n)
    for g in stream:
        if args.format == "graph6":
            print(write_graph6(g))
        elif args.format == "text":
            sys.stdout.write(g.to_text() + "\n")
        else:
            sys.stdout.write(g.to_dot())
    return 0


def _cmd_recognize(args):
    for g in _stdin_graphs(args):
        cover = is_h_line(g)
        doc = {
            "canonical_form": canonical_form(g).hex(),
            "is_line": cover is not None,
            "cover": cover.to_json_dict() if cover else None,
            "cases": [],
        }
        _emit(doc, args.pretty)
    return 0


def _cmd_covers(args):
    for g in _stdin_graphs(args):
        covers = enumerate_strict_covers(g)
        doc = {
            "canonical_form": canonical_form(g).hex(),
            "count": len(covers),
            "covers": [c.to_json_dict() for c in covers],
        }
        _emit(doc, args.pretty)
    return 0


def _cmd_sums(args):
    with open(args.F) as fh:
        f_graph = HoffmanGraph.from_text(fh.read())
    classes = tuple(args.classes.split(","))
    for g in enumerate_sums(
        f_graph,
        args.slim_k,
        classes=classes,
        component_count_k=args.ck,
    ):
        doc = {
            "slim_count": g.slim_count,
            "fat_count": g.fat_count,
            "edges": sorted(g.edges()),
            "canonical_form": canonical_form(g).hex(),
        }
        _emit(doc, args.pretty)
    return 0


def _cmd_spectral(args):
    for g in _stdin_graphs(args):
        interval = smallest_eigenvalue(g)
        doc = {
            "lambda_min_lo": float(interval.lower),
            "lambda_min_hi": float(interval.upper),
            "vs_threshold": compare_threshold(interval).value,
            "equals_threshold": equals_threshold(interval),
        }
        _emit(doc, args.pretty)
    return 0


def _cmd_catalog(args):
    cat = build_catalog(
        args.nmax, jobs=args.jobs, progress=lambda m: print(m, file=sys.stderr)
    )
    cat.save(args.out)
    _emit(
        {"counts": cat.counts(), "total": cat.total(), "checksum": cat.checksum()},
        args.pretty,
    )
    return 0


def _cmd_screen(args):
    cat = _load_or_build_catalog(args, need=8)
    for g in _stdin_graphs(args):
        doc = {
            "canonical_form": canonical_form(g).hex(),
            "is_line": screen(g, cat),
        }
        _emit(doc, args.pretty)
    return 0


def _cmd_verify(args):
    catalog = None
    if args.claim in ("prop2.1", "table1", "eigen"):
        catalog = _load_or_build_catalog(args, need=min(args.nmax or 8, 9))
    report = verify_claim(
        args.claim,
        catalog=catalog,
        n=args.n,
        sample_size=args.sample,
        jobs=args.jobs,
    )
    print(report.to_json(pretty=args.pretty))
    return 0 if report.ok else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="hoffline",
        description="Hoffman graphs, {H2,H3,H5}-line-graph recognition, and "
        "the minimal forbidden subgraph catalog.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON output")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes for bulk runs")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    g = add("gen", help="generate slim graphs up to isomorphism")
    g.add_argument("-n", type=int, required=True)
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--connected", action="store_true", default=True,
                      help="connected graphs only (default)")
    mode.add_argument("--all", action="store_true",
                      help="include disconnected graphs")
    g.add_argument("--format", choices=("graph6", "text", "dot"), default="graph6")
    g.set_defaults(func=_cmd_gen)

    r = add("recognize", help="line-graph recognition, graph6 on stdin")
    r.set_defaults(func=_cmd_recognize)

    c = add("covers", help="strict covers up to equivalence, graph6 on stdin")
    c.set_defaults(func=_cmd_covers)

    s = add("sums", help="compositions F (+) K for a fat graph F")
    s.add_argument("--F", required=True, help="fat graph file (text format)")
    s.add_argument("--slim-k", type=int, required=True, dest="slim_k")
    s.add_argument("--ck", type=int, default=None, help="component count of K")
    s.add_argument("--classes", default="H1,H2,H3,H5")
    s.set_defaults(func=_cmd_sums)

    e = add("spectral", help="smallest-eigenvalue certification, graph6 on stdin")
    e.set_defaults(func=_cmd_spectral)

    k = add("catalog", help="build the forbidden-subgraph catalog")
    k.add_argument("action", choices=("build",))
    k.add_argument("--nmax", type=int, default=8)
    k.add_argument("--out", required=True)
    k.set_defaults(func=_cmd_catalog)

    sc = add("screen", help="membership by forbidden-subgraph containment")
    sc.add_argument("--catalog", default=None)
    sc.add_argument("--nmax", type=int, default=None)
    sc.set_defaults(func=_cmd_screen)

    v = add("verify", help="run a published-claim checker")
    v.add_argument("--claim", choices=CLAIMS, required=True)
    v.add_argument("--nmax", type=int, default=None)
    v.add_argument("--n", type=int, default=None, help="size for the uniqueness audit")
    v.add_argument("--sample", type=int, default=None,
                   help="sample size for the uniqueness audit")
    v.add_argument("--catalog", default=None)
    v.set_defaults(func=_cmd_verify)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HoffmanGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
