"""Command-line front end.

Exit codes: 0 success, 1 at least one mismatch, 2 usage error, 3 a resource
cap blocked a computation the command could not do without.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import IO, Iterator, Sequence

from . import __version__
from .algebra import SpaceParams
from .conformance import (
    CHECK_IDS,
    default_grid,
    render_report,
    run_checks,
    single_point_report,
    sweep_grid,
    sweep_points,
)
from .errors import DSGraphError, ResourceError, UsageError
from .graph import build_graph, export_graph, iter_bits, vertex_label
from .invariants import CapExceeded, Caps, analyze, maximal_clique_census

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one-line diagnostics
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    """Parse ``"2,3,5"``, ``"1..4"`` or a mix such as ``"1..2,4"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"empty integer list {text!r}")
    return out


def _check_list(text: str) -> list[str]:
    if text.strip() == "":
        return []
    chosen = [c.strip().upper() for c in text.split(",") if c.strip()]
    bad = [c for c in chosen if c not in CHECK_IDS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown check id(s) {', '.join(bad)}")
    return chosen


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True, help="prime field size")
    p.add_argument("--r", type=int, required=True, help="dimension of U")
    p.add_argument("--s", type=int, required=True, help="dimension of W")


def _add_caps(p: argparse.ArgumentParser) -> None:
    d = Caps()
    p.add_argument("--vertex-cap", type=_positive, default=d.vertex_cap)
    p.add_argument("--bfs-cap", type=_positive, default=d.bfs_cap)
    p.add_argument("--clique-cap", type=_positive, default=d.clique_cap)
    p.add_argument("--clique-budget", type=_positive, default=d.clique_budget)
    p.add_argument("--independence-cap", type=_positive, default=d.independence_cap)
    p.add_argument("--chromatic-cap", type=_positive, default=d.chromatic_cap)
    p.add_argument("--edgeconn-cap", type=_positive, default=d.edgeconn_cap)
    p.add_argument("--updom-cap", type=_positive, default=d.updom_cap)


def _add_output(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", help="write to this file instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dsgraph", description="Direct-sum graphs of vector spaces over GF(q).")
    parser.add_argument("--version", action="version", version=f"dsgraph {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="construct the graph and print its order and size")
    _add_params(p)
    _add_caps(p)

    p = sub.add_parser("analyze", help="compute every invariant for one parameter triple")
    _add_params(p)
    _add_caps(p)
    _add_output(p, ("table", "json"))

    p = sub.add_parser("verify", help="compare predictions with computation for one triple")
    _add_params(p)
    _add_caps(p)
    _add_output(p, ("table", "json", "csv"))
    p.add_argument("--checks", type=_check_list, help="comma-separated check ids (default: all)")

    p = sub.add_parser("sweep", help="run the checks over a parameter grid")
    p.add_argument("--q-set", type=_int_list, help="field sizes, e.g. 2,3,5")
    p.add_argument("--r-range", type=_int_list, help="e.g. 1..4")
    p.add_argument("--s-range", type=_int_list, help="e.g. 1..4")
    p.add_argument(
        "--default-grid",
        action="store_true",
        help="q in {2,3,5}, 1 <= r <= s <= 4, order <= 1000",
    )
    p.add_argument("--workers", type=_positive, default=1)
    _add_caps(p)
    _add_output(p, ("table", "json", "csv"))
    p.add_argument("--checks", type=_check_list, help="comma-separated check ids (default: all)")

    p = sub.add_parser("export", help="write the graph as DOT, edge list or JSON")
    _add_params(p)
    _add_caps(p)
    _add_output(p, ("dot", "edgelist", "json"))

    p = sub.add_parser("cliques", help="list all maximal cliques with a census by size")
    _add_params(p)
    _add_caps(p)
    _add_output(p, ("table", "json"))
    return parser


def _caps(args: argparse.Namespace) -> Caps:
    return Caps(
        vertex_cap=args.vertex_cap,
        bfs_cap=args.bfs_cap,
        clique_cap=args.clique_cap,
        clique_budget=args.clique_budget,
        independence_cap=args.independence_cap,
        chromatic_cap=args.chromatic_cap,
        edgeconn_cap=args.edgeconn_cap,
        updom_cap=args.updom_cap,
    )


@contextlib.contextmanager
def _sink(path: str | None, stdout: IO[str]) -> Iterator[IO[str]]:
    if path is None:
        yield stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        yield fh


def _params(args: argparse.Namespace, caps: Caps) -> SpaceParams:
    return SpaceParams(args.q, args.r, args.s, vertex_cap=caps.vertex_cap)


def _cmd_build(args, caps, out) -> int:
    g = build_graph(_params(args, caps))
    out.write(f"order={g.order} size={g.size}\n")
    return EXIT_OK


def _cmd_analyze(args, caps, out) -> int:
    report = analyze(build_graph(_params(args, caps)), caps)
    doc = report.to_dict()
    with _sink(args.out, out) as fh:
        if args.format == "json":
            fh.write(json.dumps(doc, indent=2) + "\n")
        else:
            for key, value in doc.items():
                fh.write(f"{key}: {json.dumps(value)}\n")
    return EXIT_OK


def _cmd_verify(args, caps, out) -> int:
    params = _params(args, caps)
    report = single_point_report(run_checks(params, args.checks, caps), params, caps)
    with _sink(args.out, out) as fh:
        render_report(report, args.format, fh)
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def _cmd_sweep(args, caps, out) -> int:
    if args.default_grid:
        if args.q_set or args.r_range or args.s_range:
            raise UsageError("--default-grid cannot be combined with --q-set/--r-range/--s-range")
        report = sweep_points(default_grid(), caps, args.checks, args.workers)
    else:
        if not (args.q_set and args.r_range and args.s_range):
            raise UsageError("sweep needs --q-set, --r-range and --s-range (or --default-grid)")
        report = sweep_grid(args.q_set, args.r_range, args.s_range, caps, args.checks, args.workers)
    with _sink(args.out, out) as fh:
        render_report(report, args.format, fh)
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def _cmd_export(args, caps, out) -> int:
    g = build_graph(_params(args, caps))
    with _sink(args.out, out) as fh:
        export_graph(g, args.format, fh)
    return EXIT_OK


def _cmd_cliques(args, caps, out) -> int:
    g = build_graph(_params(args, caps))
    census = maximal_clique_census(g, cap=caps.clique_cap, budget=caps.clique_budget, keep_cliques=True)
    cliques = [[vertex_label(g.vertices[v]) for v in iter_bits(c)] for c in census.cliques]
    with _sink(args.out, out) as fh:
        if args.format == "json":
            doc = {
                "params": {"q": args.q, "r": args.r, "s": args.s},
                "clique_number": census.clique_number,
                "census": {str(k): v for k, v in census.census.items()},
                "exhaustive": census.exhaustive,
                "cliques": cliques,
            }
            fh.write(json.dumps(doc, indent=2) + "\n")
        else:
            fh.write(f"clique_number={census.clique_number}\n")
            fh.write("census: " + ", ".join(f"size {k}: {v}" for k, v in census.census.items()) + "\n")
            for members in cliques:
                fh.write(f"[{len(members)}] {' '.join(members)}\n")
    if not census.exhaustive:
        raise ResourceError(f"clique_budget {caps.clique_budget} exhausted; listing is partial")
    return EXIT_OK


COMMANDS = {
    "build": _cmd_build,
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "export": _cmd_export,
    "cliques": _cmd_cliques,
}


def main(argv: Sequence[str] | None = None, stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        caps = _caps(args)
        return COMMANDS[args.command](args, caps, stdout)
    except (ResourceError, CapExceeded) as exc:
        stderr.write(f"dsgraph: resource cap: {exc}\n")
        return EXIT_RESOURCE
    except UsageError as exc:
        stderr.write(f"dsgraph: error: {exc}\n")
        return EXIT_USAGE
    except DSGraphError as exc:
        stderr.write(f"dsgraph: internal inconsistency: {exc}\n")
        return EXIT_MISMATCH
    except OSError as exc:
        stderr.write(f"dsgraph: I/O error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
