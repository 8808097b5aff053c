"""Command-line surface: generate -> classify -> network -> report/export.

Exit codes: 0 success, 1 usage error, 2 data or I/O error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import catalog as catalog_mod
from . import graph as graph_mod
from . import report as report_mod
from .catalog import CatalogEntry, build_catalog, write_catalog_csv, write_catalog_json
from .corpus import Corpus
from .distances import distance_matrix, write_pair_distances_csv
from .ops import constellation, invert, multiply_m5, q_rotate, retrograde_normal, star, transpose
from .rows import (
    DuplicatePitchError,
    NotNormalFormError,
    Row,
    RowParseError,
    format_row,
    parse_row,
    require_normal_form,
)

ALL_FORMATS = ("csv", "json", "gexf", "graphml", "edgelist")
WEIGHT_FLAGS = {"inv-d2": "inverse_d2", "inv-d": "inverse_d"}

_LABEL_RE = re.compile(r"^12-(\d+)[SPL]*$")


@dataclass(frozen=True)
class RunConfig:
    threshold_sq: int = graph_mod.DEFAULT_THRESHOLD_SQ
    weight_mode: str = "inverse_d2"
    louvain_seed: int = 0
    output_dir: Path = Path("out")
    formats: tuple[str, ...] = ALL_FORMATS


class _Pipeline:
    """Lazily computed shared stages for one command invocation."""

    def __init__(self, config: RunConfig):
        self.config = config
        self._corpus: Corpus | None = None
        self._entries: list[CatalogEntry] | None = None
        self._dmat: np.ndarray | None = None

    @property
    def corpus(self) -> Corpus:
        if self._corpus is None:
            self._corpus = Corpus.build()
        return self._corpus

    @property
    def entries(self) -> list[CatalogEntry]:
        if self._entries is None:
            self._entries = build_catalog(self.corpus.primes)
        return self._entries

    @property
    def dmat(self) -> np.ndarray:
        if self._dmat is None:
            self._dmat = distance_matrix([e.row for e in self.entries])
        return self._dmat

    def network(self):
        return graph_mod.build_network(
            self.entries,
            threshold_sq=self.config.threshold_sq,
            weight_mode=self.config.weight_mode,
            dmat=self.dmat,
        )

    def resolve(self, text: str) -> CatalogEntry:
        m = _LABEL_RE.match(text.strip())
        if m:
            idx = int(m.group(1))
            if 0 <= idx < len(self.entries):
                entry = self.entries[idx]
                if text.strip() in (f"12-{idx}", entry.label):
                    return entry
        raise graph_mod.UnknownLabelError(text)

    def resolve_row(self, text: str) -> Row:
        """A catalog label or a row literal."""
        if _LABEL_RE.match(text.strip()):
            return self.resolve(text).row
        return parse_row(text)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; remap to 1 per the exit-code contract."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _formats(text: str) -> tuple[str, ...]:
    parts = tuple(p.strip() for p in text.split(",") if p.strip())
    bad = [p for p in parts if p not in ALL_FORMATS]
    if bad or not parts:
        raise argparse.ArgumentTypeError(
            f"formats must be a comma-separated subset of {', '.join(ALL_FORMATS)}"
        )
    return parts


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threshold-sq", type=_nonneg_int,
                        default=graph_mod.DEFAULT_THRESHOLD_SQ, metavar="N",
                        help="squared-distance edge threshold (default 20)")
    common.add_argument("--weight", choices=sorted(WEIGHT_FLAGS), default="inv-d2",
                        help="edge weight mode (default inv-d2)")
    common.add_argument("--seed", type=int, default=0, metavar="N",
                        help="community-detection seed (default 0)")
    common.add_argument("--out", type=Path, default=Path("out"), metavar="DIR",
                        help="output directory (default ./out)")
    common.add_argument("--format", type=_formats, default=ALL_FORMATS, metavar="LIST",
                        help="comma-separated output formats: " + ",".join(ALL_FORMATS))

    parser = _Parser(prog="aisnet",
                     description="All-interval twelve-tone row catalog and network analysis.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("generate", parents=[common],
                   help="write the 918-row catalog (CSV/JSON)")

    p_tr = sub.add_parser("transform", parents=[common],
                          help="apply T:t, I, R, M, Q, star or constellation")
    p_tr.add_argument("target", help="catalog label or bracketed row literal")
    p_tr.add_argument("op", help="T:t | I | R | M | Q | star | constellation")

    p_cl = sub.add_parser("classify", parents=[common],
                          help="show S/P/L flags for a row or label")
    p_cl.add_argument("target", help="catalog label or bracketed row literal")

    p_net = sub.add_parser("network", parents=[common],
                           help="write graph exports, stats report and figures")
    p_net.add_argument("--dump-pairs", type=int, default=None, metavar="CAP",
                       help="also dump pair distances with d^2 <= CAP")

    p_nb = sub.add_parser("neighbors", parents=[common],
                          help="list adjacent labels with squared distances")
    p_nb.add_argument("label")

    p_cq = sub.add_parser("cliques", parents=[common], help="list maximal cliques")
    p_cq.add_argument("--min-size", type=int, default=3, metavar="N")
    p_cq.add_argument("--containing", default=None, metavar="LABEL")

    sub.add_parser("stats", parents=[common], help="print the stats report as JSON")

    sub.add_parser("fit-degree", parents=[common],
                   help="fit the degree distribution and plot it")
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        threshold_sq=args.threshold_sq,
        weight_mode=WEIGHT_FLAGS[args.weight],
        louvain_seed=args.seed,
        output_dir=args.out,
        formats=tuple(args.format),
    )


def cmd_generate(pipe: _Pipeline) -> int:
    out = pipe.config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if "csv" in pipe.config.formats:
        path = out / "catalog.csv"
        write_catalog_csv(pipe.entries, path)
        written.append(path)
    if "json" in pipe.config.formats:
        path = out / "catalog.json"
        write_catalog_json(pipe.entries, path)
        written.append(path)
    print(f"catalog: {len(pipe.entries)} rows -> " + ", ".join(map(str, written)))
    return 0


def cmd_transform(pipe: _Pipeline, target: str, op: str) -> int:
    row = require_normal_form(pipe.resolve_row(target))
    name = op.strip()
    upper = name.upper()
    if upper.startswith("T"):
        m = re.match(r"^T:?(-?\d+)$", upper)
        if m:
            print(format_row(transpose(row, int(m.group(1)))))
            return 0
    simple = {"I": invert, "R": retrograde_normal, "M": multiply_m5, "Q": q_rotate}
    if upper in simple:
        print(format_row(simple[upper](row)))
        return 0
    if name.lower() == "star":
        for label, r in star(row).items():
            print(f"{label} {format_row(r)}")
        return 0
    if name.lower() == "constellation":
        con = constellation(row)
        for row_op, col_op in con.cells:
            print(f"{row_op},{col_op} {format_row(con.cells[(row_op, col_op)])}")
        return 0
    raise ValueError(f"unknown operation {op!r}; use T:t, I, R, M, Q, star, constellation")


def cmd_classify(pipe: _Pipeline, target: str) -> int:
    row = require_normal_form(pipe.resolve_row(target))
    by_row = {e.row: e for e in pipe.entries}
    entry = by_row.get(row)
    if entry is None:
        s = catalog_mod.is_symmetric_inverted(row)
        p = catalog_mod.is_parallel_inverted(row)
        windows = catalog_mod.link_window_starts(row)
        label = "-"
    else:
        s, p, windows, label = entry.is_s, entry.is_p, entry.link_window_starts, entry.label
    print(f"label {label}")
    print(f"row {format_row(row)}")
    print(f"s {int(s)}")
    print(f"p {int(p)}")
    print(f"l {int(bool(windows))}")
    print("link_windows " + (";".join(map(str, sorted(windows))) if windows else "-"))
    return 0


def cmd_network(pipe: _Pipeline, dump_pairs: int | None) -> int:
    cfg = pipe.config
    out = cfg.output_dir
    out.mkdir(parents=True, exist_ok=True)
    g = pipe.network()
    rep, assignment, truncated, pure = report_mod.compute_stats(
        pipe.corpus, pipe.entries, g, pipe.dmat, cfg.louvain_seed
    )
    if assignment is not None:
        graph_mod.assign_community_attrs(g, assignment)
    for n in g.nodes:
        g.nodes[n]["degree"] = g.degree(n)
    written = []
    if "gexf" in cfg.formats:
        graph_mod.write_gexf(g, out / "ais_network.gexf")
        written.append(out / "ais_network.gexf")
    if "graphml" in cfg.formats:
        graph_mod.write_graphml(g, out / "ais_network.graphml")
        written.append(out / "ais_network.graphml")
    if "edgelist" in cfg.formats:
        graph_mod.write_edge_list_csv(g, out / "edges.csv")
        written.append(out / "edges.csv")
    report_mod.write_stats_json(rep, out / "stats.json")
    written.append(out / "stats.json")
    if truncated is not None and pure is not None:
        stats = graph_mod.degree_stats(g)
        report_mod.plot_degree_distribution(
            stats.histogram, truncated, pure, out / "degree_distribution.png"
        )
        written.append(out / "degree_distribution.png")
    if assignment is not None:
        report_mod.plot_community_sizes(assignment, out / "community_sizes.png")
        written.append(out / "community_sizes.png")
    if dump_pairs is not None:
        n = write_pair_distances_csv(pipe.entries, out / "pair_distances.csv",
                                     cap_sq=dump_pairs, dmat=pipe.dmat)
        written.append(out / "pair_distances.csv")
        print(f"pair_distances: {n} pairs with d^2 <= {dump_pairs}")
    print(rep.to_json(), end="")
    print("written: " + ", ".join(map(str, written)))
    return 0


def cmd_neighbors(pipe: _Pipeline, label: str) -> int:
    g = pipe.network()
    entry = pipe.resolve(label)
    for nbr, d2 in graph_mod.neighbor_distances(g, entry.label):
        print(f"{nbr} {d2}")
    return 0


def cmd_cliques(pipe: _Pipeline, min_size: int, containing: str | None) -> int:
    g = pipe.network()
    cliques = graph_mod.maximal_cliques(g, min_size=min_size)
    if containing is not None:
        label = pipe.resolve(containing).label
        cliques = [c for c in cliques if label in c]
    for c in cliques:
        print(" ".join(c))
    return 0


def cmd_stats(pipe: _Pipeline) -> int:
    g = pipe.network()
    rep, *_ = report_mod.compute_stats(
        pipe.corpus, pipe.entries, g, pipe.dmat, pipe.config.louvain_seed
    )
    print(rep.to_json(), end="")
    return 0


def cmd_fit_degree(pipe: _Pipeline) -> int:
    out = pipe.config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    g = pipe.network()
    stats = graph_mod.degree_stats(g)
    truncated = graph_mod.fit_truncated_power_law(stats.histogram)
    pure = graph_mod.fit_pure_power_law(stats.histogram)
    hist_path = out / "degree_histogram.csv"
    with open(hist_path, "w") as fh:
        fh.write("degree,count\n")
        for k, c in stats.histogram.items():
            fh.write(f"{k},{c}\n")
    report_mod.plot_degree_distribution(
        stats.histogram, truncated, pure, out / "degree_distribution.png"
    )
    print(f"alpha {truncated.alpha!r}")
    print(f"lambda {truncated.lam!r}")
    print(f"goodness {truncated.goodness!r}")
    print(f"pure_power_law_goodness {pure.goodness!r}")
    print(f"written: {hist_path}, {out / 'degree_distribution.png'}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        pipe = _Pipeline(_config_from(args))
        if args.command == "generate":
            return cmd_generate(pipe)
        if args.command == "transform":
            return cmd_transform(pipe, args.target, args.op)
        if args.command == "classify":
            return cmd_classify(pipe, args.target)
        if args.command == "network":
            return cmd_network(pipe, args.dump_pairs)
        if args.command == "neighbors":
            return cmd_neighbors(pipe, args.label)
        if args.command == "cliques":
            return cmd_cliques(pipe, args.min_size, args.containing)
        if args.command == "stats":
            return cmd_stats(pipe)
        if args.command == "fit-degree":
            return cmd_fit_degree(pipe)
        raise AssertionError(f"unhandled command {args.command}")
    except (
        graph_mod.UnknownLabelError,
        graph_mod.EmptyGraphError,
        graph_mod.InsufficientDataError,
        RowParseError,
        NotNormalFormError,
        DuplicatePitchError,
        ValueError,
        OSError,
    ) as exc:
        print(f"aisnet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
