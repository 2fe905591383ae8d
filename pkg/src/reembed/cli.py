"""Command-line interface: ``reembed faces|enumerate|census|verify``.

Vertices are 1-based on the command line and in all output.
Exit codes: 0 ok, 2 input error, 3 precondition violation, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from reembed.census import (
    DEFAULT_MAX_N,
    KNOWN_COUNTS,
    build_tables,
    census_embedded,
    oracle_sweep,
    tables_csv,
    verify_graph,
)
from reembed.engine import (
    dual_agreement,
    enumerate_reembeddings,
    fold_by_automorphisms,
    prepare,
    reembed,
)
from reembed.errors import DualNotSimple, Not3Connected, NotCubic, NotPlanar, ParseError, SweepTooLarge
from reembed.graph import Graph, edge_mask, emit_graph6, parse_graph6, read_graph6_lines
from reembed.named import NAMED

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4


class InputError(Exception):
    pass


def _load_graphs(args) -> list[Graph]:
    if args.input is not None:
        if args.graph is not None:
            raise InputError("give either a graph argument or --input, not both")
        if args.input == "-":
            lines = sys.stdin.read().splitlines()
        else:
            try:
                with open(args.input) as fh:
                    lines = fh.read().splitlines()
            except OSError as exc:
                raise InputError(str(exc)) from exc
        graphs = list(read_graph6_lines(lines))
        if not graphs:
            raise InputError("no graphs in input")
        return graphs
    if args.graph is None:
        raise InputError("a graph (graph6 string or named graph) or --input is required")
    if args.graph.lower() in NAMED:
        return [NAMED[args.graph.lower()]()]
    return [parse_graph6(args.graph)]


def parse_twists(g: Graph, spec: str | None) -> int:
    """``"1-2,3-4"`` (1-based endpoints) to an edge bitmask."""
    if not spec:
        return 0
    idx = []
    for item in spec.split(","):
        item = item.strip()
        try:
            u, v = (int(x) for x in item.split("-"))
        except ValueError:
            raise InputError(f"bad edge {item!r}; expected u-v") from None
        if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.has_edge(u - 1, v - 1):
            raise InputError(f"no edge {item} in graph")
        idx.append(g.edge_index(u - 1, v - 1))
    return edge_mask(idx)


def _walk_str(seq) -> str:
    return "(" + ",".join(str(v) for v in seq) + ")"


def cmd_faces(args, out) -> int:
    records = []
    for g in _load_graphs(args):
        p = prepare(g)
        t = parse_twists(g, args.twist)
        r = reembed(g, p.embedding, t)
        records.append((g, r))
    if args.format == "json":
        payload = [dict(graph=emit_graph6(g), **r.to_json(g)) for g, r in records]
        json.dump(payload if len(payload) > 1 else payload[0], out, indent=2)
        out.write("\n")
        return EXIT_OK
    for g, r in records:
        data = r.to_json(g)
        out.write(f"graph {emit_graph6(g)}\n")
        for w in data["walks"]:
            out.write(f"  {_walk_str(w)}\n")
        out.write(f"chi={data['chi']} orientable={str(data['orientable']).lower()} "
                  f"surface={data['surface']} strong={str(data['strong']).lower()}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    blocks = []
    for g in _load_graphs(args):
        p = prepare(g)
        res = enumerate_reembeddings(g, args.surface, strong_only=args.strong, prepared=p)
        if args.fold_automorphisms:
            res = fold_by_automorphisms(p.embedding, res)
        blocks.append((g, res))
    if args.format == "json":
        payload = [{"graph": emit_graph6(g), "reembeddings": [r.to_json(g) for r in res]} for g, res in blocks]
        json.dump(payload if len(payload) > 1 else payload[0], out, indent=2)
        out.write("\n")
        return EXIT_OK
    if args.format == "csv":
        out.write("graph,twists,pattern,surface,chi,orientable,strong\n")
        for g, res in blocks:
            for r in res:
                d = r.to_json(g)
                tw = " ".join(f"{u}-{v}" for u, v in d["twist_edges"])
                out.write(f"{emit_graph6(g)},{tw},{d['pattern']},{d['surface']},{d['chi']},"
                          f"{str(d['orientable']).lower()},{str(d['strong']).lower()}\n")
        return EXIT_OK
    for g, res in blocks:
        out.write(f"graph {emit_graph6(g)}: {len(res)} re-embedding(s)\n")
        for r in res:
            d = r.to_json(g)
            tw = ",".join(f"{u}-{v}" for u, v in d["twist_edges"])
            out.write(f"  [{d['pattern']}] twists={tw} surface={d['surface']} "
                      f"strong={str(d['strong']).lower()}\n")
            for w in d["walks"]:
                out.write(f"    {_walk_str(w)}\n")
    return EXIT_OK


def cmd_census(args, out) -> int:
    rows = build_tables(args.max_n, allow_large=args.allow_large, jobs=args.jobs)
    if args.format == "json":
        json.dump([{"n": r.n, "g": r.g_count, "p": r.p_count, "r": r.r_count, "k": r.k_count}
                   for r in rows], out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write(tables_csv(rows))
    else:
        out.write(f"{'n':>3} {'G':>6} {'P':>6} {'R':>6} {'K':>6}  known\n")
        for r in rows:
            ok = KNOWN_COUNTS.get(r.n) == r.as_tuple()
            out.write(f"{r.n:>3} {r.g_count:>6} {r.p_count:>6} {r.r_count:>6} {r.k_count:>6}  "
                      f"{'match' if ok else 'DIFFERS'}\n")
    return EXIT_OK


def _verify_one(item):
    g, pe = item
    mismatches = verify_graph(g, pe, oracle_sweep(g, pe))
    p = prepare(g)
    disagree = []
    for surface in ("projective", "torus", "klein"):
        disagree.extend(sorted(h.mask for h in dual_agreement(g, surface, p)))
    return emit_graph6(g), mismatches, disagree


def cmd_verify(args, out) -> int:
    if args.max_n > 10 and not args.allow_large:
        raise SweepTooLarge("verify beyond n=10 needs --allow-large (2^|E| sweep per graph)")
    items = [item for n in range(4, args.max_n + 1, 2) for item in census_embedded(n)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_verify_one, items))
    else:
        results = [_verify_one(it) for it in items]
    failed = 0
    for (g, _), (code, mismatches, disagree) in zip(items, results):
        if mismatches or disagree:
            failed += 1
            if mismatches:
                m = mismatches[0]
                tw = ",".join(f"{g.edges[e][0] + 1}-{g.edges[e][1] + 1}"
                              for e in range(g.m) if (m.twist_set >> e) & 1)
                where = "oracle only" if m.in_oracle else "patterns only"
                out.write(f"FAIL n={g.n} {code}: {m.surface} strong_only={m.strong_only} "
                          f"twists={{{tw}}} ({where})\n")
            else:
                out.write(f"FAIL n={g.n} {code}: dual criterion disagrees on dual edge mask {disagree[0]}\n")
        else:
            out.write(f"PASS n={g.n} {code}\n")
    out.write(f"{len(items) - failed}/{len(items)} graphs pass\n")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reembed",
        description="Strong re-embeddings of 3-connected cubic planar graphs on the "
                    "projective plane, torus and Klein bottle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("graph", nargs="?", help="graph6 string or a named graph: " + ", ".join(NAMED))
        p.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line; '-' for stdin")

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("faces", help="facial walks of the spherical embedding with some edges twisted")
    graph_args(p)
    p.add_argument("--twist", metavar="U-V[,U-V...]", help="edges to twist, 1-based endpoints")
    fmt(p)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("enumerate", help="re-embeddings found from dual subgraph patterns")
    graph_args(p)
    p.add_argument("--surface", required=True, choices=("projective", "torus", "klein"))
    p.add_argument("--strong", action="store_true", help="only the strong-embedding patterns")
    p.add_argument("--fold-automorphisms", action="store_true",
                   help="keep one re-embedding per automorphism orbit of twist sets")
    fmt(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_enumerate)

    for name, helptext, default_n, func, choices in (
        ("census", "count graphs with strong re-embeddings per surface", 12, cmd_census,
         ("text", "json", "csv")),
        ("verify", "check pattern families against an exhaustive twist-set sweep", 8, cmd_verify,
         ("text",)),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--max-n", type=int, default=default_n)
        p.add_argument("--allow-large", action="store_true",
                       help=f"allow census beyond n={DEFAULT_MAX_N} or verify beyond n=10")
        p.add_argument("--jobs", type=int, default=1)
        fmt(p, choices)
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "max_n", 4) < 4:
            raise InputError("--max-n must be at least 4")
        return args.func(args, out)
    except (InputError, ParseError, SweepTooLarge) as exc:
        print(f"reembed: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotCubic, NotPlanar, Not3Connected, DualNotSimple) as exc:
        print(f"reembed: precondition violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
