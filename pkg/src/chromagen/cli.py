"""Command-line interface.

Subcommands: states, matrix, gf, grid, series, verify.  Results go to
standard output, diagnostics to standard error.  Exit codes: 0 success,
1 usage or input error, 2 computation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .algebra import InexactDivisionError, SingularSystemError
from .genfunc import generating_function, gf_grid
from .graphs import (Connector, Graph, GraphParseError, monogamy_connector,
                     parse_connector, parse_graph, path_graph)
from .oracle import OracleLimitError, verify_series
from .render import FORMATS, render
from .states import enumerate_states
from .transfer import transfer_matrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTE = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route through UsageError
    # instead so the CLI can keep its own exit-code contract.
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="chromagen",
        description="Exact generating functions for chromatic polynomials of "
                    "layered graphs, via a symbolic transfer matrix.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add_graph_source(p, with_connector: bool):
        p.add_argument("--graph", metavar="PATH",
                       help="graph file ('m <int>' then 'e <u> <v>' lines)")
        if with_connector:
            p.add_argument("--connector", metavar="PATH",
                           help="connector file ('m <int>' then 'p <a> <b>' "
                                "lines); defaults to the monogamy connector")
        p.add_argument("--grid-width", type=int, metavar="M",
                       help="shorthand for a width-M path graph with the "
                            "monogamy connector")

    def add_common(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("-v", "--verbose", action="store_true",
                       help="progress messages on standard error")

    p = sub.add_parser("states", help="list the canonical coloring states")
    add_graph_source(p, with_connector=False)
    add_common(p)

    p = sub.add_parser("matrix", help="print the symbolic transfer matrix")
    add_graph_source(p, with_connector=True)
    add_common(p)

    p = sub.add_parser("gf", help="print the generating function")
    add_graph_source(p, with_connector=True)
    p.add_argument("--no-empty-term", action="store_true",
                   help="drop the z^0 term (the constant 1)")
    p.add_argument("--z-name", default="z", metavar="SYMBOL",
                   help="symbol for the series variable (default z)")
    add_common(p)

    p = sub.add_parser("grid", help="generating function for width-M grids")
    p.add_argument("--grid-width", type=int, metavar="M", required=False)
    p.add_argument("--no-empty-term", action="store_true")
    p.add_argument("--z-name", default="z", metavar="SYMBOL")
    add_common(p)

    p = sub.add_parser("series", help="series coefficients (chromatic "
                                      "polynomials per layer count)")
    add_graph_source(p, with_connector=True)
    p.add_argument("--order", type=int, default=4, metavar="N",
                   help="highest power of z (default 4)")
    p.add_argument("--no-empty-term", action="store_true")
    add_common(p)

    p = sub.add_parser("verify", help="check the series against brute force")
    add_graph_source(p, with_connector=True)
    p.add_argument("--order", type=int, default=4, metavar="N",
                   help="number of layers to verify (default 4)")
    add_common(p)

    return parser


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _resolve_inputs(args) -> tuple[Graph, Connector]:
    """Graph/connector from --grid-width or --graph/--connector flags."""
    grid_width = getattr(args, "grid_width", None)
    graph_path = getattr(args, "graph", None)
    connector_path = getattr(args, "connector", None)
    if grid_width is not None and graph_path is not None:
        raise UsageError("--grid-width and --graph are mutually exclusive")
    if grid_width is not None:
        if grid_width < 1:
            raise UsageError("--grid-width must be at least 1")
        if connector_path is not None:
            raise UsageError("--grid-width already fixes the connector")
        return path_graph(grid_width), monogamy_connector(grid_width)
    if graph_path is None:
        raise UsageError("either --graph or --grid-width is required")
    graph = parse_graph(_read_file(graph_path))
    if connector_path is None:
        connector = monogamy_connector(graph.m)
    else:
        connector = parse_connector(_read_file(connector_path))
        if connector.m != graph.m:
            raise UsageError(f"graph has m={graph.m} but connector has "
                             f"m={connector.m}")
    return graph, connector


def run(argv: Sequence[str], stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    """Execute one CLI invocation; returns the exit status."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version paths
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    if args.command is None:
        print("error: a subcommand is required "
              "(states, matrix, gf, grid, series, verify)", file=err)
        return EXIT_USAGE

    def note(message: str) -> None:
        if args.verbose:
            print(message, file=err)

    try:
        return _dispatch(args, out, note)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except GraphParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (OracleLimitError, SingularSystemError, InexactDivisionError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_COMPUTE


def _dispatch(args, out: TextIO, note) -> int:
    fmt = args.format

    if args.command == "states":
        graph, _ = _resolve_inputs(args)
        states = enumerate_states(graph)
        note(f"{len(states)} states")
        print(render(states, fmt), file=out)
        return EXIT_OK

    if args.command == "matrix":
        graph, connector = _resolve_inputs(args)
        tm = transfer_matrix(graph, connector)
        note(f"transfer matrix is {tm.size}x{tm.size}")
        print(render(tm, fmt), file=out)
        return EXIT_OK

    if args.command in ("gf", "grid"):
        if args.command == "grid":
            if args.grid_width is None:
                raise UsageError("--grid-width is required")
            if args.grid_width < 1:
                raise UsageError("--grid-width must be at least 1")
            note(f"solving for the width-{args.grid_width} grid")
            gf = gf_grid(args.grid_width)
        else:
            graph, connector = _resolve_inputs(args)
            note("building transfer matrix and solving the linear system")
            gf = generating_function(graph, connector)
        if args.no_empty_term:
            gf = gf.without_empty_term()
        print(render(gf, fmt, zvar=args.z_name), file=out)
        return EXIT_OK

    if args.command == "series":
        graph, connector = _resolve_inputs(args)
        if args.order < 0:
            raise UsageError("--order must be nonnegative")
        gf = generating_function(graph, connector)
        coeffs = gf.series(args.order)
        start = 1 if args.no_empty_term else 0
        rows = [(n, coeffs[n]) for n in range(start, args.order + 1)]
        print(render(rows, fmt), file=out)
        return EXIT_OK

    if args.command == "verify":
        graph, connector = _resolve_inputs(args)
        if args.order < 1:
            raise UsageError("--order must be at least 1")
        note(f"verifying n=1..{args.order} against brute force")
        report = verify_series(graph, connector, args.order)
        print(render(report, fmt), file=out)
        return EXIT_OK if report.passed else EXIT_VERIFY

    raise UsageError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
