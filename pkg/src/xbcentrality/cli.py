"""Command-line interface: ``xbc compute|estimate|correlate|bench``.

Vertex ids on the command line and in output are the ids used in the graph
file. Values are ordered-pair counts unless ``--unordered`` is given.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .analysis import bench, correlate, correlation_csv
from .errors import (
    DegenerateSampleSpace,
    DisconnectedGraphError,
    GraphFormatError,
    GuardExceeded,
    InvalidVertexSetError,
    PathCountOverflow,
)
from .exact import (
    betweenness_all,
    co_betweenness,
    exclusive_betweenness_direct,
    exclusive_betweenness_ie,
    group_betweenness_direct,
    group_betweenness_ie,
    to_unordered,
)
from .graph import Graph, LoadOptions, largest_component, load_edge_list
from .sampling import SAMPLERS, estimate

EXIT_USAGE, EXIT_DATA, EXIT_LIMIT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _id_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids, got {text!r}") from None


def _size_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xbc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, type=Path, help="edge-list file")
    common.add_argument("--allow-disconnected", action="store_true",
                        help="keep only the largest connected component")
    common.add_argument("--unordered", action="store_true",
                        help="report unordered-pair counts (halved)")
    common.add_argument("--out", type=Path, help="CSV output path")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="exact centrality")
    p.add_argument("--measure", choices=["b", "gb", "cb", "xb"], default="xb")
    p.add_argument("--set", type=_id_list, dest="members")
    p.add_argument("--method", choices=["ie", "direct", "auto"], default="auto")

    p = sub.add_parser("estimate", parents=[common], help="sampled exclusive betweenness")
    p.add_argument("--set", type=_id_list, dest="members", required=True)
    p.add_argument("--sampler", choices=SAMPLERS, default="pair")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("correlate", parents=[common], help="XB/GB/CB over all k-sets")
    p.add_argument("--size", type=int, default=2)

    p = sub.add_parser("bench", parents=[common], help="exact XB runtime per set size")
    p.add_argument("--sizes", type=_size_range, default=range(2, 6))
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _load(args) -> Graph:
    options = LoadOptions(require_connected=not args.allow_disconnected)
    g = load_edge_list(args.graph, options)
    return largest_component(g) if args.allow_disconnected else g


def _present(value: int, args) -> int:
    return to_unordered(value) if args.unordered else value


def _cmd_compute(args) -> None:
    g = _load(args)
    if args.measure == "b":
        values = betweenness_all(g)
        lines = [(g.labels[v], _present(x, args)) for v, x in enumerate(values)]
        for label, x in lines:
            print(f"{label}: {x}")
        if args.out:
            args.out.write_text("vertex,b\n" + "".join(f"{lab},{x}\n" for lab, x in lines))
        return
    if not args.members:
        raise InvalidVertexSetError(f"--set is required for --measure {args.measure}")
    a = g.vertex_set(args.members, labels=True)
    if args.measure == "cb":
        value = co_betweenness(g, a)
    else:
        ie = args.method == "ie"
        if args.measure == "xb":
            value = exclusive_betweenness_ie(g, a) if ie else exclusive_betweenness_direct(g, a)
        else:
            value = group_betweenness_ie(g, a) if ie else group_betweenness_direct(g, a)
    value = _present(value, args)
    print(value)
    if args.out:
        members = "-".join(str(g.labels[v]) for v in a)
        args.out.write_text(f"set,{args.measure}\n{members},{value}\n")


def _cmd_estimate(args) -> None:
    g = _load(args)
    a = g.vertex_set(args.members, labels=True)
    if args.samples < 1:
        raise ValueError("--samples must be at least 1")
    est = estimate(g, a, args.sampler, args.samples, args.seed)
    scale = 0.5 if args.unordered else 1.0
    text = (
        f"sampler: {est.sampler}\n"
        f"mean: {est.mean * scale!r}\n"
        f"variance: {est.sample_variance * scale * scale!r}\n"
        f"T: {est.samples_T}\n"
        f"seed: {est.seed}\n"
    )
    sys.stdout.write(text)
    if args.out:
        args.out.write_text("sampler,mean,variance,T,seed\n"
                            f"{est.sampler},{est.mean * scale!r},{est.sample_variance * scale * scale!r},"
                            f"{est.samples_T},{est.seed}\n")


def _cmd_correlate(args) -> None:
    g = _load(args)
    report = correlate(g, args.size)
    if args.unordered:
        report.rows = [(s, *(to_unordered(x) for x in vals)) for s, *vals in report.rows]
    for (m1, m2), r in report.pearson.items():
        print(f"pearson({m1},{m2}) = {r:.6f}  spearman({m1},{m2}) = {report.spearman[(m1, m2)]:.6f}")
    print(f"rows: {len(report.rows)}")
    if args.out:
        meta = {
            "graph": args.graph,
            "convention": "unordered" if args.unordered else "ordered",
            "size": args.size,
            "version": __version__,
        }
        args.out.write_text(correlation_csv(report, meta))


def _cmd_bench(args) -> None:
    g = _load(args)
    report = bench(g, args.sizes, args.trials, args.seed)
    print(f"cache build: {report.cache_build_time:.4f} s")
    print("k  trials  max_s     median_s")
    for r in report.rows:
        print(f"{r.k:<2} {r.trials:<7} {r.max_time:<9.5f} {r.median_time:.5f}")
    if args.out:
        args.out.write_text(report.to_csv())


COMMANDS = {
    "compute": _cmd_compute,
    "estimate": _cmd_estimate,
    "correlate": _cmd_correlate,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        COMMANDS[args.command](args)
    except (GraphFormatError, DisconnectedGraphError, OSError) as exc:
        print(f"xbc: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (GuardExceeded, PathCountOverflow) as exc:
        print(f"xbc: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InvalidVertexSetError, DegenerateSampleSpace, ValueError) as exc:
        print(f"xbc: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
