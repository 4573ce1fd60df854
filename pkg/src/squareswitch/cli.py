"""Command-line front end: validate, reconfigure, replay, enumerate, hpgraph."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis import Form, Kind, classify_form, decompose
from .errors import (
    CapExceeded,
    DimsMismatch,
    NoSimplePath,
    NotCanonical,
    NotSimple,
    ParseError,
    PathError,
    ReplayDivergence,
)
from .grid import GridDims, HamPath, from_moves, parse_moves_text, parse_path_text
from .oracle import DEFAULT_CAP, build_hp_graph, enumerate_simple, graph_stats, iter_st_moves
from .reconfig import parse_trace, reconfigure, replay
from .render import RenderSpec, render_steps

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_NO_SIMPLE_PATH = 4
EXIT_CAP = 5


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_path(file: str) -> HamPath:
    return parse_path_text(_read(file))


def _unit_cookie_runs(dec, side: Kind) -> list[int]:
    """Lengths of runs of consecutive unit cookies on one side, in path order."""
    runs, cur = [], 0
    for p in dec.parts:
        if p.kind == side and p.size == 1:
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    if cur:
        runs.append(cur)
    return runs


def cmd_validate(args: argparse.Namespace) -> int:
    dims, moves = parse_moves_text(_read(args.file))
    if not dims.admits_path():
        raise NoSimplePath(f"a {dims} grid has no s,t Hamiltonian path")
    try:
        path = from_moves(dims, moves)
    except PathError as exc:
        print(f"grid {dims}")
        print(f"hamiltonian: no ({exc})")
        return EXIT_INVALID
    dec = decompose(path)
    form = classify_form(path)
    print(f"grid {dims}")
    print("hamiltonian: yes")
    print(f"simple: {'no' if form == Form.NOT_SIMPLE else 'yes'}")
    cookies = dec.cookie_count()
    print(f"{form}, k={dec.k}, {cookies} cookie{'s' if cookies != 1 else ''}")
    print(f"j={dec.j} k={dec.k} l={dec.l}")
    counts = {kind: len(dec.of_kind(kind)) for kind in Kind if dec.of_kind(kind)}
    if counts:
        print("parts: " + " ".join(f"{kind}={c}" for kind, c in counts.items()))
    if form == Form.ALMOST_CANONICAL:
        # N-S separators leave unit cookies on W/E; E-W ones leave them on N/S
        sides = (Kind.COOKIE_W, Kind.COOKIE_E) if dec.orientation == "NS" else (Kind.COOKIE_N, Kind.COOKIE_S)
        for side in sides:
            runs = _unit_cookie_runs(dec, side)
            print(f"unit {side} runs: {' '.join(map(str, runs)) if runs else '-'}")
    if args.verbose:
        sys.stdout.write(dec.format())
    return EXIT_OK if form != Form.NOT_SIMPLE else EXIT_INVALID


def _write_renders(trace, directory: str, fmt: str) -> None:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    ext = "svg" if fmt == "svg" else "txt"
    for i, drawing in render_steps(list(trace.paths()), RenderSpec(format=fmt)):
        (out / f"step_{i:04d}.{ext}").write_text(drawing)


def cmd_reconfigure(args: argparse.Namespace) -> int:
    src, dst = _load_path(args.source), _load_path(args.target)
    trace = reconfigure(src, dst, check=not args.fast)
    Path(args.trace).write_text(trace.format())
    bound = 5 * src.dims.size() // 4
    print(f"switches {len(trace)} (bound {bound})")
    if args.render:
        _write_renders(trace, args.render, args.format)
    return EXIT_OK


def cmd_replay(args: argparse.Namespace) -> int:
    trace = parse_trace(_read(args.trace))
    start = _load_path(args.source)
    final = replay(trace, start)
    if final != trace.final:
        print("replay ended away from the recorded final path", file=sys.stderr)
        return EXIT_INVALID
    print(f"{final.dims.m} {final.dims.n}")
    print(final.moves)
    return EXIT_OK


def _cap(args: argparse.Namespace) -> int:
    return sys.maxsize if args.force else DEFAULT_CAP


def cmd_enumerate(args: argparse.Namespace) -> int:
    dims = GridDims(args.m, args.n)
    if args.simple_only:
        moves = [p.moves for p in enumerate_simple(dims, _cap(args))]
    else:
        moves = list(iter_st_moves(dims, _cap(args)))
    print(len(moves))
    if args.list:
        for mv in moves:
            print(mv)
    return EXIT_OK


def cmd_hpgraph(args: argparse.Namespace) -> int:
    dims = GridDims(args.m, args.n)
    g = build_hp_graph(dims, _cap(args))
    print(f"nodes {len(g.nodes)}")
    print(f"edges {len(g.edges)}")
    sys.stdout.write(graph_stats(g, traces=not args.no_traces).format())
    if args.export:
        Path(args.export).write_text(g.export_edges())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squareswitch", description="Square-switch reconfiguration of simple s,t Hamiltonian paths in grids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a path file and describe its structure")
    p.add_argument("file")
    p.add_argument("-v", "--verbose", action="store_true", help="list every internal subpath")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reconfigure", help="switch one simple path into another")
    p.add_argument("source", metavar="FROM")
    p.add_argument("target", metavar="TO")
    p.add_argument("--trace", required=True, help="where to write the trace")
    p.add_argument("--render", metavar="DIR", help="write one drawing per step into DIR")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--fast", action="store_true", help="skip the per-switch structural checks")
    p.set_defaults(func=cmd_reconfigure)

    p = sub.add_parser("replay", help="re-apply a trace to a start path")
    p.add_argument("trace", metavar="TRACE")
    p.add_argument("source", metavar="FROM")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("enumerate", help="count s,t Hamiltonian paths of an m x n grid")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--simple-only", action="store_true")
    p.add_argument("--list", action="store_true", help="print the move strings")
    p.add_argument("--force", action="store_true", help=f"allow grids above {DEFAULT_CAP} vertices")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hpgraph", help="build the switch graph of all simple paths")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--export", metavar="FILE", help="write the edge list")
    p.add_argument("--force", action="store_true", help=f"allow grids above {DEFAULT_CAP} vertices")
    p.add_argument("--no-traces", action="store_true", help="skip running the algorithm on every pair")
    p.set_defaults(func=cmd_hpgraph)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoSimplePath as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_SIMPLE_PATH
    except CapExceeded as exc:
        print(f"error: {exc} (use --force)", file=sys.stderr)
        return EXIT_CAP
    except (DimsMismatch, NotSimple, NotCanonical, PathError, ReplayDivergence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
