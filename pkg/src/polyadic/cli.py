"""Command-line front end.

Exit codes: 0 success, 1 I/O or malformed data, 2 usage, 3 resource cap.
"""
from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

import numpy as np

from polyadic import convert as cv
from polyadic import metrics as mt
from polyadic.core import (
    DEFAULT_FACE_CAP,
    concurrence_matrix,
    graph_from_relations,
    hypergraph_from_relations,
    sc_from_relations,
)
from polyadic.errors import ParseError, PolyadicError, ResourceLimitError
from polyadic.experiments import NodeMeasures, coauthor_experiment, email_experiment
from polyadic.hon import build_hon, hon_reachable, parse_paths
from polyadic.ingest import parse_relation_lines, read_triple_files
from polyadic.svg import scatter

log = logging.getLogger("polyadic")

EXIT_IO, EXIT_USAGE, EXIT_CAP = 1, 2, 3
FORMALISMS = ("graph", "simplicial", "hypergraph")
NODE_METRICS = {
    "graph": ("degree", "clustering"),
    "simplicial": ("participation", "maximal-participation"),
    "hypergraph": ("hyperdegree", "clustering"),
}
EDGE_METRICS = ("cardinality", "fill")
GLOBAL_METRICS = {"graph": ("path-length",), "simplicial": ("betti",), "hypergraph": ("eo-pairs",)}


class UsageError(Exception):
    pass


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (float, np.floating)):
        return f"{x:.6f}"
    return str(x)


def csv_text(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(fmt(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def write_text(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def load_table(args):
    if args.input is None:
        raise UsageError("--input is required")
    if args.format == "triple":
        return read_triple_files(args.input)
    return parse_relation_lines(Path(args.input).read_text(encoding="utf-8"))


def build(table, formalism: str, dedup: bool = False):
    rows = [rel for _, rel in table]
    if formalism == "graph":
        return graph_from_relations(table.n, rows)
    if formalism == "simplicial":
        return sc_from_relations(table.n, rows)
    return hypergraph_from_relations(table.n, rows, dedup=dedup)


def relation_lines(rels, labels) -> str:
    return "".join(" ".join(labels[x] for x in r) + "\n" for r in rels)


def betti_line(report) -> str:
    """Betti numbers with trailing zeros dropped (beta_0 always kept)."""
    b = list(report.betti)
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    return ",".join(str(x) for x in b)


# ------------------------------------------------------------- commands


def cmd_convert(args) -> int:
    src, dst = getattr(args, "from"), args.to
    if src == dst:
        raise UsageError(f"cannot convert {src} to itself")
    table = load_table(args)
    x = build(table, src, args.dedup)
    labels = table.labels.labels
    if src == "hypergraph":
        sc = cv.hypergraph_to_simplicial(x)
        out = cv.hypergraph_to_graph(x) if dst == "graph" else sc
    elif src == "graph":
        sc = cv.graph_to_clique_complex(x, args.clique_cap)
        out = sc if dst == "simplicial" else cv.simplicial_to_hypergraph(sc)
    else:
        if dst == "graph":
            out = cv.simplicial_to_graph(x)
        else:
            mode = (cv.AllFaces(args.max_dim if args.max_dim is not None else x.dimension, args.face_cap)
                    if args.all_faces else cv.MaximalOnly())
            out = cv.simplicial_to_hypergraph(x, mode)
    if dst == "graph":
        rels = out.edges()
    elif dst == "simplicial":
        rels = out.maximal
    else:
        rels = out.hyperedges
    write_text(args.output, relation_lines(rels, labels))
    return 0


def cmd_stats(args) -> int:
    table = load_table(args)
    f = args.formalism
    metrics = args.metric or list(NODE_METRICS[f][:1])
    allowed = NODE_METRICS[f] + GLOBAL_METRICS[f] + (EDGE_METRICS if f == "hypergraph" else ())
    for m in metrics:
        if m not in allowed:
            raise UsageError(f"metric {m!r} is not available for {f}; choose from {', '.join(allowed)}")
    kinds = {("node" if m in NODE_METRICS[f] else "edge" if m in EDGE_METRICS else m) for m in metrics}
    if len(kinds) > 1:
        raise UsageError("node, hyperedge and whole-structure metrics cannot be mixed")
    x = build(table, f, args.dedup)
    labels = table.labels.labels
    kind = kinds.pop()

    if kind == "path-length":
        s = mt.path_length_summary(x)
        write_text(None, csv_text(["average_path_length", "connected_pairs", "disconnected_pairs"],
                                  [[s["average_path_length"], s["connected_pairs"], s["disconnected_pairs"]]]))
        return 0
    if kind == "betti":
        write_text(None, betti_line(mt.betti_numbers(x, args.max_dim, args.face_cap)) + "\n")
        return 0
    if kind == "eo-pairs":
        rows = []
        for j in range(len(x)):
            ej = set(x.hyperedges[j])
            for k in range(j + 1, len(x)):
                if ej.intersection(x.hyperedges[k]):
                    rows.append([j, k, mt.extra_overlap(x, j, k)])
        write_text(None, csv_text(["edge_j", "edge_k", "extra_overlap"], rows))
        return 0
    if kind == "edge":
        cols = {"cardinality": [len(e) for e in x.hyperedges], "fill": mt.fill_coefficients(x).tolist()}
        rows = [[j, " ".join(labels[v] for v in e)] + [cols[m][j] for m in metrics]
                for j, e in enumerate(x.hyperedges)]
        write_text(None, csv_text(["edge", "members"] + metrics, rows))
        return 0

    cols = {}
    for m in metrics:
        if f == "graph":
            cols[m] = x.degrees().tolist() if m == "degree" else mt.clustering_all(x).tolist()
        elif f == "hypergraph":
            cols[m] = (mt.hyperdegrees(x).tolist() if m == "hyperdegree"
                       else mt.hypergraph_clustering_all(x).tolist())
        elif m == "maximal-participation":
            cols[m] = mt.maximal_participation_all(x).tolist()
        else:
            top = args.max_dim if args.max_dim is not None else max(x.dimension, 0)
            cols[m] = [";".join(map(str, mt.simplex_participation(x, v, top, args.face_cap)))
                       for v in range(x.n)]
    rows = [[v, labels[v]] + [cols[m][v] for m in metrics] for v in range(x.n)]
    write_text(None, csv_text(["node", "label"] + metrics, rows))
    return 0


def _rows_complex(args):
    table = load_table(args)
    rows = [rel for _, rel in table]
    if args.formalism == "simplicial":
        return sc_from_relations(table.n, rows), table
    return hypergraph_from_relations(table.n, rows, dedup=args.dedup), table


def cmd_dowker(args) -> int:
    x, table = _rows_complex(args)
    dual = mt.dowker_dual(concurrence_matrix(x))
    row_labels = [f"r{i}" for i in range(dual.n)]
    write_text(args.output, relation_lines(dual.maximal, row_labels))
    if args.betti:
        original = sc_from_relations(x.n, x.maximal if hasattr(x, "maximal") else x.hyperedges)
        sys.stdout.write(f"complex,{betti_line(mt.betti_numbers(original, face_cap=args.face_cap))}\n")
        sys.stdout.write(f"dual,{betti_line(mt.betti_numbers(dual, face_cap=args.face_cap))}\n")
    return 0


def cmd_betti(args) -> int:
    x, _ = _rows_complex(args)
    sc = x if hasattr(x, "maximal") else cv.hypergraph_to_simplicial(x)
    report = mt.betti_numbers(sc, args.max_dim, args.face_cap)
    rows = [[k, c, b] for k, (c, b) in enumerate(zip(report.face_counts, report.betti))]
    write_text(args.output, csv_text(["dim", "faces", "betti"], rows))
    return 0


def cmd_hon(args) -> int:
    if args.input is None:
        raise UsageError("--input is required")
    paths = parse_paths(Path(args.input).read_text(encoding="utf-8"))
    try:
        h = build_hon(paths, args.order)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    write_text(args.output, "".join(line + "\n" for line in h.edge_lines()))
    for src, dst in args.reach or ():
        try:
            verdict = hon_reachable(h, src, dst)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        sys.stdout.write(("true" if verdict else "false") + "\n")
    return 0


def _log1p10(values):
    return [math.log10(1 + v) for v in values]


def cmd_coauthor(args) -> int:
    table = load_table(args)
    log.info("parsed %d relations over %d nodes", len(table), table.n)
    by_year, corr = coauthor_experiment(table, args.year_min, args.year_max, args.dedup)
    out = Path(args.output_dir)
    for year, rows in by_year.items():
        write_text(out / f"degrees_{year}.csv", csv_text(
            ["node", "label", "graph_degree", "sc_degree", "hg_degree"],
            [[r.node, r.label, r.graph_degree, r.sc_degree, r.hg_degree] for r in rows]))
    write_text(out / "correlations.csv", csv_text(
        ["year", "pair", "rho", "p_value", "n", "status"],
        [[c.year, c.pair, c.rho, c.p_value, c.n, c.status] for c in corr]))
    if args.svg_year is not None:
        rows = by_year.get(args.svg_year)
        if rows is None:
            raise UsageError(f"year {args.svg_year} not present in the data")
        for name, a, b in (("graph-hg", "graph_degree", "hg_degree"),
                           ("sc-hg", "sc_degree", "hg_degree"),
                           ("graph-sc", "graph_degree", "sc_degree")):
            xs = _log1p10(getattr(r, a) for r in rows)
            ys = _log1p10(getattr(r, b) for r in rows)
            write_text(out / f"scatter_{name}_{args.svg_year}.svg", scatter(
                xs, ys, title=f"{name} degrees, {args.svg_year}",
                xlabel=f"log10(1 + {a})", ylabel=f"log10(1 + {b})",
                width=args.width, height=args.height))
    sys.stdout.write(f"relations={len(table)} nodes={table.n} years={len(by_year)}\n")
    return 0


def cmd_email(args) -> int:
    table = load_table(args)
    sys.stdout.write(f"relations={len(table)} nodes={table.n}\n")
    out = Path(args.output_dir)
    measures = None if args.band_only_graph else NodeMeasures.of(table)
    summary = []
    for lo in args.card_min:
        rows, res = email_experiment(table, lo, args.card_max, args.dedup_teams,
                                     args.band_only_graph, measures)
        tag = f"{lo}_{args.card_max}"
        write_text(out / f"emails_{tag}.csv", csv_text(
            ["email", "cardinality", "avg_graph_cc", "avg_hg_cc", "fill"],
            [[r.email, r.cardinality, r.avg_graph_cc, r.avg_hg_cc, r.fill] for r in rows]))
        write_text(out / f"scatter_{tag}.svg", scatter(
            [r.avg_graph_cc for r in rows], [r.avg_hg_cc for r in rows],
            title=f"emails with {lo}-{args.card_max} participants",
            xlabel="average graph clustering", ylabel="average hypergraph clustering",
            color_values=[math.log10(r.fill) if r.fill > 0 else None for r in rows],
            color_label="log10(fill)", zero_label="fill = 0",
            width=args.width, height=args.height))
        summary.append([lo, args.card_max, len(rows), res.rho if res else None,
                        res.p_value if res else None])
        sys.stdout.write(f"band [{lo},{args.card_max}]: emails={len(rows)} "
                         f"rho={fmt(res.rho if res else None)} p={fmt(res.p_value if res else None)}\n")
    write_text(out / "summary.csv", csv_text(["card_min", "card_max", "emails", "rho", "p_value"], summary))
    return 0


# --------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input file (lines) or triple-file prefix (triple)")
    common.add_argument("--format", choices=("lines", "triple"), default="lines")
    common.add_argument("--output-dir", default=".")
    common.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)
    common.add_argument("--clique-cap", type=int, default=cv.DEFAULT_CLIQUE_CAP)
    common.add_argument("--dedup", action="store_true", help="collapse repeated relations")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="polyadic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="convert between formalisms")
    p.add_argument("--from", required=True, choices=FORMALISMS)
    p.add_argument("--to", required=True, choices=FORMALISMS)
    p.add_argument("--all-faces", action="store_true",
                   help="simplicial->hypergraph: one hyperedge per face of dimension >= 1")
    p.add_argument("--max-dim", type=int)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("stats", parents=[common], help="per-node, per-hyperedge or global metrics as CSV")
    p.add_argument("--formalism", choices=FORMALISMS, default="hypergraph")
    p.add_argument("--metric", action="append",
                   choices=sorted({m for v in NODE_METRICS.values() for m in v}
                                  | {m for v in GLOBAL_METRICS.values() for m in v} | set(EDGE_METRICS)))
    p.add_argument("--max-dim", type=int)
    p.set_defaults(func=cmd_stats)

    for name, func, helptext in (("dowker", cmd_dowker, "Dowker dual of the input rows"),
                                 ("betti", cmd_betti, "Betti numbers over GF(2)")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--formalism", choices=("simplicial", "hypergraph"), default="hypergraph",
                       help="read input rows as maximal simplices or as hyperedges")
        p.add_argument("-o", "--output", type=Path)
        if name == "dowker":
            p.add_argument("--betti", action="store_true", help="also print both Betti sequences")
        else:
            p.add_argument("--max-dim", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("hon", parents=[common], help="fixed-order higher-order network from paths")
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--reach", nargs=2, action="append", metavar=("SRC", "DST"))
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_hon)

    p = sub.add_parser("coauthor-experiment", parents=[common],
                       help="per-year degree comparison across formalisms")
    p.add_argument("--year-min", type=int)
    p.add_argument("--year-max", type=int)
    p.add_argument("--svg-year", type=int)
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.set_defaults(func=cmd_coauthor)

    p = sub.add_parser("email-experiment", parents=[common],
                       help="graph vs hypergraph clustering of email participants")
    p.add_argument("--card-min", type=int, nargs="+", default=[5])
    p.add_argument("--card-max", type=int, default=25)
    p.add_argument("--dedup-teams", action="store_true")
    p.add_argument("--band-only-graph", action="store_true")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.set_defaults(func=cmd_email)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"polyadic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"polyadic: resource limit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, PolyadicError, ValueError) as exc:
        print(f"polyadic: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
