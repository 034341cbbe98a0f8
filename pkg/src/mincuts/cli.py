"""Command-line entry point: ``mincuts {count,construct,bounds,census,verify-conjecture}``.

Graphs travel as graph6. Exit codes: 0 success, 1 conjecture evidence
violated, 2 bad usage or input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bounds, census, constructions
from .graph import GraphFormatError, from_graph6, members
from .separators import (
    count_minimal_separators,
    enumerate_minimal_separators,
    is_minimal_separator_full,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_graph_arg(text: str):
    """A graph6 string, ``-`` for stdin, or a path to a file holding one line."""
    if text == "-":
        line = sys.stdin.readline()
    elif Path(text).is_file():
        line = Path(text).read_text().partition("\n")[0]
    else:
        line = text
    parts = line.split()
    if not parts:
        raise UsageError("no graph6 input")
    g = from_graph6(parts[0])
    terminals = (int(parts[1]), int(parts[2])) if len(parts) >= 3 else None
    return g, terminals


def cmd_count(args) -> int:
    g, _ = _read_graph_arg(args.graph)
    for x in (args.u, args.v):
        if not 0 <= x < g.n:
            raise UsageError(f"vertex {x} out of range for n={g.n}")
    if args.u == args.v:
        raise UsageError("u and v must differ")
    if not args.list:
        print(count_minimal_separators(g, args.u, args.v))
        return EXIT_OK
    seps = sorted(members(t) for t in enumerate_minimal_separators(g, args.u, args.v))
    for sep in seps:
        t = sum(1 << x for x in sep)
        if not is_minimal_separator_full(g, args.u, args.v, t):
            raise census.InvariantViolation(f"separator {sep} fails the full-component check")
    print(len(seps))
    for sep in seps:
        print(" ".join(map(str, sep)))
    return EXIT_OK


def _terminal_graph(text: str) -> constructions.TerminalGraph:
    g, terminals = _read_graph_arg(text)
    u, v = terminals or (0, 1)
    return constructions.TerminalGraph(g, u, v)


def cmd_construct(args) -> int:
    if args.name == "seymour":
        if len(args.params) != 1:
            raise UsageError("usage: construct seymour M")
        tg = constructions.seymour(int(args.params[0]))
        g = tg.g
    elif args.name == "glue":
        if len(args.params) != 2:
            raise UsageError("usage: construct glue A B   (graph6 strings or files, optional 'u v')")
        tg = constructions.glue(_terminal_graph(args.params[0]), _terminal_graph(args.params[1]))
        g = tg.g
    else:
        if not 2 <= len(args.params) <= 3:
            raise UsageError("usage: construct named NAME N [M]")
        name, *sizes = args.params
        g = constructions.named_graph(name, *map(int, sizes))
        tg = None
    line = g.to_graph6().decode()
    if args.terminals and tg is not None:
        line += f" {tg.u} {tg.v}"
    print(line)
    return EXIT_OK


def cmd_bounds(args) -> int:
    known = {}
    if args.census:
        known = {r.size: r.value for r in census.read_records(args.census) if r.kind == "g"}
    rows = bounds.bounds_table(args.n_max, known)
    render = {"csv": bounds.rows_to_csv, "json": bounds.rows_to_json, "plain": bounds.rows_to_plain}
    sys.stdout.write(render[args.format](rows))
    if args.format == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def _parse_sizes(specs: list[str]) -> list[int]:
    sizes = []
    for spec in specs:
        if "-" in spec:
            lo, hi = spec.split("-", 1)
            sizes.extend(range(int(lo), int(hi) + 1))
        else:
            sizes.append(int(spec))
    return sizes


def _check_profile(kind: str, sizes: list[int], allow_large: bool) -> None:
    for size in sizes:
        census.check_size(kind, size)
        if census.vertex_count(kind, size) > census.DEFAULT_MAX_VERTICES and not allow_large:
            raise UsageError(
                f"{kind}-census size {size} exceeds {census.DEFAULT_MAX_VERTICES} vertices; "
                "pass --allow-large for the long-running profile"
            )


def cmd_census(args) -> int:
    sizes = _parse_sizes(args.sizes)
    _check_profile(args.kind, sizes, args.allow_large)
    if args.out is None:
        for size in sizes:
            rec = census.compute_g(size, args.workers) if args.kind == "g" else census.compute_c(size, args.workers)
            print(rec.to_json())
        return EXIT_OK
    cfg = census.CensusConfig(
        kind=args.kind,
        sizes=sizes,
        out=args.out,
        witnesses=args.witnesses,
        checkpoint=args.checkpoint,
        workers=args.workers,
        chunk_size=args.chunk_size,
        checkpoint_every=args.checkpoint_every,
    )
    for rec in census.census_run(cfg) or []:
        print(f"{rec.kind}({rec.size}) = {rec.value}  graphs={rec.graphs_examined}  "
              f"root={rec.root:.6f}  witnesses={len(rec.witnesses)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_profile("g", [args.k_max], args.allow_large)
    rows = census.verify_conjecture(args.k_max)
    failed = False
    for row in rows:
        status = "ok" if row.ok else "VIOLATION"
        print(f"k={row.k:2d}  g={row.g:6d}  3^floor(k/3)={row.lower:6d}  "
              f"g^(1/k)={row.root:.9f}  bound={bounds.CUBE_ROOT_3:.9f}  {status}")
        if not row.ok:
            failed = True
            for w in row.witnesses:
                print(f"  witness: {w}", file=sys.stderr)
    if failed:
        print("g(k)^(1/k) exceeds 3^(1/3) for some k; see witnesses above", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mincuts", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count minimal u,v-separators of a graph6 graph")
    p.add_argument("graph", help="graph6 string, file, or - for stdin")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--list", action="store_true", help="also print each separator")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("construct", help="print a construction as graph6")
    p.add_argument("name", choices=["seymour", "glue", "named"])
    p.add_argument("params", nargs="*")
    p.add_argument("--terminals", action="store_true", help="append the terminals 'u v'")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="lower/upper bound table")
    p.add_argument("n_max", type=int)
    p.add_argument("--format", choices=["csv", "json", "plain"], default="plain")
    p.add_argument("--census", type=Path, help="JSON-lines census results to fill exact_g")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("census", help="exhaustive g(k) or c(n) census")
    p.add_argument("kind", choices=["g", "c"])
    p.add_argument("sizes", nargs="+", help="sizes or ranges like 1-7")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path)
    p.add_argument("--witnesses", type=Path)
    p.add_argument("--checkpoint", type=Path)
    p.add_argument("--chunk-size", type=int, default=256)
    p.add_argument("--checkpoint-every", type=int, default=8)
    p.add_argument("--allow-large", action="store_true", help="permit 10 and 11 vertex runs")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-conjecture", help="check g(k)^(1/k) <= 3^(1/3) for k <= K_MAX")
    p.add_argument("k_max", type=int)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except census.InvariantViolation as exc:
        print(f"mincuts: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, GraphFormatError, ValueError, census.CensusError, OSError) as exc:
        print(f"mincuts: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
