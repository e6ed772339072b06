"""Command-line interface: generate, inspect, color, verify, and bench.

All output is deterministic for fixed inputs and seeds, except the
timing column of `bench`.
"""

from __future__ import annotations

import argparse
import sys
import time

from .coloring import verify as verify_coloring
from .gen import GenSpec, RejectionBudgetExhausted, generate, random_max4
from .graphio import GraphFormatError, emit_coloring, emit_graph, parse_coloring, parse_graph
from .metrics import girth
from .multigraph import MultiGraph
from .oracle import BoundTooLow, exact_strong_index
from .solver import MaxDegreeExceeded, Unsatisfiable, solve

GEN_KINDS = ("erdos_nesetril_5", "star_neighborhood", "random_max4", "random_4regular")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(path: str) -> MultiGraph:
    return parse_graph(_read_text(path))


def _cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        min_girth=args.min_girth,
        allow_loops=args.loops,
        allow_parallel=args.parallel,
    )
    g = generate(spec)
    sys.stdout.write(emit_graph(g))
    return 0


def _cmd_stats(args) -> int:
    g = _load_graph(args.file)
    has_loop = g.find_loop() is not None
    has_parallel = g.find_parallel_pair() is not None
    gi = girth(g)
    max_conf = max((len(g.conflict_set(e)) for e in range(g.edge_count)), default=0)
    print(f"n={g.vertex_count}")
    print(f"m={g.edge_count}")
    print(f"max_degree={g.max_degree()}")
    print(f"min_degree={g.min_degree()}")
    print(f"has_loop={'yes' if has_loop else 'no'}")
    print(f"has_parallel={'yes' if has_parallel else 'no'}")
    print(f"girth={gi if gi is not None else 'none'}")
    print(f"max_conflict_set={max_conf}")
    return 0


def _cmd_color(args) -> int:
    g = _load_graph(args.file)
    col, report = solve(g)
    for k, comp in enumerate(report.components, start=1):
        print(f"component {k}: strategy={comp.strategy} edges={comp.edge_count} colors={comp.colors_used}")
    print(f"colors_used={report.colors_used}")
    print(f"FALLBACK={report.fallback_invocations}")
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(emit_coloring(col))
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    col = parse_coloring(_read_text(args.coloring), g)
    bad = verify_coloring(col)
    total = col.is_total()
    if not bad and total:
        print("OK")
        return 0
    for e, f, c in bad:
        print(f"edges {e} and {f} both have color {c}")
    if not total:
        print(f"uncolored: {len(col.uncolored_edges())} edges")
    return 1


def _cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    res = exact_strong_index(g, upper_bound=args.ub)
    print(res.chi)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(emit_coloring(res.witness))
    return 0


def bench_rows(sizes, seed: int = 0) -> list[tuple[int, int, int, int]]:
    """(n, m, millis, colors) per size, sizes ascending. Used by bench
    and by the wall-clock scaling checks in the test suite."""
    rows = []
    for n in sorted(sizes):
        g = random_max4(n, seed=seed)
        t0 = time.perf_counter()
        _, report = solve(g)
        millis = int((time.perf_counter() - t0) * 1000)
        rows.append((n, g.edge_count, millis, report.colors_used))
    return rows


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    print("n,m,millis,colors")
    for n, m, millis, colors in bench_rows(sizes, seed=args.seed):
        print(f"{n},{m},{millis},{colors}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongcolor",
        description="Strong edge-coloring with at most 22 colors for max degree 4.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and print it")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--n", type=int, default=50, help="vertex count (random kinds)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-girth", type=int, default=3, help="random_4regular only")
    p.add_argument("--loops", action="store_true", help="random_max4: allow loops")
    p.add_argument("--parallel", action="store_true", help="random_max4: allow parallel edges")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("stats", help="structural summary of a graph file")
    p.add_argument("file", help="graph file, or - for stdin")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("color", help="run the solver on a graph file")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--out", help="write the coloring to this file")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact minimum color count (small graphs)")
    p.add_argument("graph")
    p.add_argument("--ub", type=int, default=22, help="upper bound to search")
    p.add_argument("--out", help="write the witness coloring to this file")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("bench", help="time the solver on random graphs")
    p.add_argument("--sizes", default="1000,10000,100000")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MaxDegreeExceeded, Unsatisfiable, BoundTooLow, RejectionBudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
