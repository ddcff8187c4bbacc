"""Command-line front end.

Maps are passed as UMF words (``"1 2 -1 -2"``) or as paths to UMF files.
Every command prints plain text, or JSON with ``--json``.  Exit codes: 0 on
success, 1 on invalid input, 2 when a cap is hit, 3 when a verification
suite reports failures.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import graph as graphx
from .canon import canonical_form
from .enumeration import (EnumerationCursor, EnumerationSpec, enumerate_maps,
                          enumerate_words)
from .errors import CapExceeded, MapError, PropertyFailure
from .homology import (genus_from_rank, interlacement, is_even_partition,
                       parity_certificate)
from .maps import read_umf, parse_word, to_umf
from .structure import bridge_elimination, bridges, perfect_matching
from .surgery import neighborhood
from .verify import SUITES, counting_report, run_suite

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_PROPERTY = 0, 1, 2, 3


def _maps(tokens):
    if len(tokens) == 1 and os.path.isfile(tokens[0]):
        with open(tokens[0]) as fh:
            return list(read_umf(fh))
    return [parse_word(" ".join(tokens))]


def _degrees(text):
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError("degrees must be comma-separated integers") from None


def _workers(args):
    return args.threads if args.threads > 0 else (os.cpu_count() or 1)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        for line in text_lines:
            print(line)


def cmd_info(args):
    out = []
    lines = []
    for m in _maps(args.word):
        d = {"word": to_umf(m), "edges": m.n_edges, "vertices": m.n_vertices,
             "degrees": list(m.degrees), "genus": m.genus,
             "vertex_cycles": [list(c) for c in m.vertex_cycles]}
        out.append(d)
        lines.append("%s\n  genus %d, V=%d, E=%d, degrees %s" % (
            d["word"], m.genus, m.n_vertices, m.n_edges, list(m.degrees)))
    _emit(args, out, lines)
    return EXIT_OK


def cmd_canon(args):
    out = []
    for m in _maps(args.word):
        c = canonical_form(m)
        out.append({"word": to_umf(m), "canonical": str(c), "symmetry_count": c.symmetry_count})
    _emit(args, out, ["%s  symmetry %d" % (d["canonical"], d["symmetry_count"]) for d in out])
    return EXIT_OK


def cmd_neighbors(args):
    out = []
    lines = []
    for m in _maps(args.word):
        nb = neighborhood(m)
        items = nb.sorted()
        d = {"word": to_umf(m), "canonical": str(nb.source), "count": len(items),
             "self_loops": nb.self_loops, "moves": nb.n_moves}
        if not args.count_only:
            d["neighbors"] = [{"word": str(c), "move": [mv.a, mv.b]} for c, mv in items]
            lines.extend("%s  via %s" % (c, mv) for c, mv in items)
        lines.append("# %d neighbors, %d self-loop moves, %d moves" % (
            len(items), nb.self_loops, nb.n_moves))
        out.append(d)
    _emit(args, out, lines)
    return EXIT_OK


def cmd_enumerate(args):
    spec = EnumerationSpec(args.degrees, args.max_classes, args.max_seconds)
    cursor = None
    if args.resume:
        with open(args.resume) as fh:
            cursor = EnumerationCursor.from_json(fh.read())
    capped = None
    if cursor is None and args.max_classes is None and args.max_seconds is None:
        arr, _ = enumerate_words(spec.degrees, workers=_workers(args))
        words = [" ".join(map(str, w)) for w in arr.tolist()]
    else:
        words = []
        try:
            for c in enumerate_maps(spec, cursor=cursor):
                words.append(str(c))
        except CapExceeded as exc:
            capped = exc
    if args.cursor_out and capped is not None:
        with open(args.cursor_out, "w") as fh:
            fh.write(capped.partial.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("# degrees %s\n" % ",".join(map(str, spec.degrees)))
            for w in words:
                fh.write(w + "\n")
    payload = {"degrees": list(spec.degrees), "count": len(words), "complete": capped is None}
    lines = []
    if not args.count_only and not args.out:
        payload["words"] = words
        lines.extend(words)
    lines.append("# %d classes%s" % (len(words), "" if capped is None else " (partial)"))
    _emit(args, payload, lines)
    return EXIT_OK if capped is None else EXIT_CAP


def _build(args):
    if args.seed:
        seeds = [m for s in args.seed for m in _maps([s])]
        return graphx.build_graph(seeds=seeds, max_nodes=args.max_nodes, strict=False)
    if not args.degrees:
        raise MapError("give --degrees or --seed")
    return graphx.build_graph(args.degrees, max_nodes=args.max_nodes, strict=False)


def cmd_graph(args):
    g = _build(args)
    fmt = args.export or ("json" if args.json else None)
    if fmt:
        text = g.to_json() if fmt == "json" else g.to_dot()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        print("%s: %d nodes, %d edges%s" % (g.provenance, len(g), g.n_edges,
                                             " (partial)" if g.partial else ""))
        for i, c in enumerate(g.nodes):
            print("%d  %s  -> %s" % (i, c, g.adjacency[i]))
    return EXIT_CAP if g.partial else EXIT_OK


def cmd_components(args):
    g = _build(args)
    if g.partial:
        print("graph is partial: connectivity undetermined", file=sys.stderr)
        return EXIT_CAP
    comps = graphx.components(g)
    iso = graphx.isolated_nodes(g)
    payload = {"nodes": len(g), "edges": g.n_edges, "components": comps,
               "connected": len(comps) <= 1, "isolated": iso}
    _emit(args, payload, ["%d nodes, %d edges, %d components" % (len(g), g.n_edges, len(comps))]
          + ["  %s" % c for c in comps] + ["isolated: %s" % iso])
    return EXIT_OK


def cmd_diameter(args):
    g = _build(args)
    if g.partial:
        print("graph is partial: diameter undetermined", file=sys.stderr)
        return EXIT_CAP
    d = graphx.diameter(g)
    value = None if math.isinf(d.value) else int(d.value)
    payload = {"nodes": len(g), "diameter": value if value is not None else "infinite",
               "exact": d.exact}
    _emit(args, payload, ["diameter %s%s" % (payload["diameter"], "" if d.exact else " (lower bound)")])
    return EXIT_OK


def cmd_bridges(args):
    out = []
    for m in _maps(args.word):
        out.append({"word": to_umf(m), "bridges": sorted(bridges(m))})
    _emit(args, out, ["%s  bridges %s" % (d["word"], d["bridges"]) for d in out])
    return EXIT_OK


def cmd_matching(args):
    out = []
    for m in _maps(args.word):
        pm = perfect_matching(m)
        out.append({"word": to_umf(m), "matching": sorted(pm.edges) if pm else None})
    _emit(args, out, ["%s  matching %s" % (d["word"], d["matching"] if d["matching"] is not None
                                           else "absent") for d in out])
    return EXIT_OK


def cmd_eliminate_bridges(args):
    out = []
    lines = []
    for m in _maps(args.word):
        trace = bridge_elimination(m)
        steps = [{"bridge": s.bridge, "move": [s.move.a, s.move.b], "word": to_umf(s.map),
                  "bridges_after": s.bridges_after} for s in trace]
        out.append({"word": to_umf(m), "steps": steps})
        lines.append(to_umf(m))
        lines.extend(s["word"] for s in steps)
    _emit(args, out, lines)
    return EXIT_OK


def cmd_invariant(args):
    out = []
    lines = []
    for m in _maps(args.word):
        A = interlacement(m)
        d = {"word": to_umf(m), "even": is_even_partition(m), "rank": A.rank,
             "genus": m.genus, "genus_from_rank": genus_from_rank(m)}
        if d["even"]:
            cert = parity_certificate(m)
            d["certificate"] = {"basis_edges": list(cert.basis_edges),
                                "u": list(cert.vector(m.n_edges))}
            tail = "certificate basis %s, u %s" % (list(cert.basis_edges),
                                                   list(cert.vector(m.n_edges)))
        else:
            d["certificate"] = None
            tail = "odd partition: no certificate"
        out.append(d)
        lines.append("%s\n  even %s, rank %d, genus %d (rank/2 = %d)\n  %s" % (
            d["word"], d["even"], d["rank"], d["genus"], d["genus_from_rank"], tail))
    _emit(args, out, lines)
    return EXIT_OK


def cmd_verify(args):
    kwargs = {}
    if args.degrees:
        kwargs["partitions"] = (args.degrees,)
    if args.max_edges:
        kwargs["max_edges"] = args.max_edges
    rep = run_suite(args.suite, **kwargs)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.summary())
        for f in rep.failures[:50]:
            print("  FAIL %s: %s" % (f["word"], f["detail"]))
        for n in rep.notes:
            print("  note: %s" % n)
    return EXIT_OK if rep.ok else EXIT_PROPERTY


def cmd_count_report(args):
    rows = counting_report()
    _emit(args, rows, ["g=%d degrees %s: %d classes, %d rooted, formula %d" % (
        r["genus"], r["degrees"], r["classes"], r["rooted"], r["formula"]) for r in rows])
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not a cap
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    p = _Parser(prog="unicellular", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--threads", type=int, default=0,
                   help="worker processes for enumeration, 0 for all cores "
                        "(results do not depend on it)")
    # the same flags are accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def word_cmd(name, fn, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("word", nargs="+", help="UMF word or UMF file")
        s.set_defaults(fn=fn)
        return s

    word_cmd("info", cmd_info, "vertices, degrees and genus")
    word_cmd("canon", cmd_canon, "canonical word and symmetry count")
    s = word_cmd("neighbors", cmd_neighbors, "surgery neighbors")
    s.add_argument("--count-only", action="store_true")
    word_cmd("bridges", cmd_bridges, "bridges of the underlying graph")
    word_cmd("matching", cmd_matching, "a perfect matching, if any")
    word_cmd("eliminate-bridges", cmd_eliminate_bridges, "remove bridges of a cubic map by surgery")
    word_cmd("invariant", cmd_invariant, "interlacement rank and parity certificate")

    s = sub.add_parser("enumerate", help="all classes with a degree partition")
    s.add_argument("--degrees", type=_degrees, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--out")
    s.add_argument("--resume", help="cursor JSON to continue from")
    s.add_argument("--cursor-out", help="where to write the cursor when a cap is hit")
    s.add_argument("--max-classes", type=int)
    s.add_argument("--max-seconds", type=float)
    s.set_defaults(fn=cmd_enumerate)

    for name, fn, help in (("graph", cmd_graph, "build the surgery graph"),
                           ("export", cmd_graph, "export the surgery graph"),
                           ("components", cmd_components, "connected components"),
                           ("diameter", cmd_diameter, "graph diameter")):
        s = sub.add_parser(name, help=help)
        s.add_argument("--degrees", type=_degrees)
        s.add_argument("--seed", action="append", help="seed word (repeatable)")
        s.add_argument("--max-nodes", type=int, default=graphx.DEFAULT_MAX_NODES)
        if fn is cmd_graph:
            s.add_argument("--export", choices=("dot", "json"),
                           default="json" if name == "export" else None)
            s.add_argument("--out")
        s.set_defaults(fn=fn)

    s = sub.add_parser("verify", help="run a property suite")
    s.add_argument("suite", help="one of: " + ", ".join(SUITES))
    s.add_argument("--degrees", type=_degrees)
    s.add_argument("--max-edges", type=int)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("count-report", help="class counts beside the collection formula")
    s.set_defaults(fn=cmd_count_report)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CapExceeded as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except PropertyFailure as exc:
        print("property failure: %s" % exc, file=sys.stderr)
        return EXIT_PROPERTY
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
