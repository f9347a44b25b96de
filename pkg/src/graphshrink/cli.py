"""Command-line front end: solve, verify, bench, subgraph, stats."""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
from pathlib import Path

import numpy as np

from .baseline import ORACLE_CAP, apsp_dijkstra, floyd_warshall
from .dimacs import parse_dimacs, write_dimacs
from .disassembly import UNBOUNDED, SolveParams
from .graph import Graph, extract_connected_subgraph
from .matrices import (
    read_distance_matrix,
    write_distance_matrix,
    write_precedence_matrix,
)
from .paths import path_weight, reconstruct_path
from .solver import solve

DEFAULT_MAX_N = 15000

REPORT_COLUMNS = [
    "instance", "n", "m", "pa_seconds", "db_seconds", "speedup",
    "removals", "residual_order", "max_removed_degree", "matrices_equal",
]


class CliError(Exception):
    pass


def _int_or_inf(text: str) -> float:
    if text.lower() in ("inf", "infinity"):
        return UNBOUNDED
    return int(text)


def _bool_flag(text: str) -> bool:
    if text.lower() in ("1", "true", "yes", "on"):
        return True
    if text.lower() in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _load_graph(args, require_connected: bool = True, check_cap: bool = True) -> Graph:
    path = Path(args.input)
    if not path.exists():
        raise CliError(f"input file not found: {path}")
    g = parse_dimacs(path.read_text())
    if check_cap and g.n_original > args.max_n:
        raise CliError(
            f"n={g.n_original} exceeds the matrix-memory cap {args.max_n} "
            f"(two n x n matrices; raise with --max-n if you have the RAM)")
    if require_connected:
        witness = g.unreachable_pair()
        if witness is not None:
            raise CliError(
                f"input graph is disconnected: no path between vertices "
                f"{witness[0]} and {witness[1]}")
    return g


def _params(args) -> SolveParams:
    return SolveParams(d_max=args.dmax, i_max=args.imax, n_min=args.nmin)


def _first_mismatch(a: np.ndarray, b: np.ndarray):
    diff = np.argwhere(a[1:, 1:] != b[1:, 1:])
    if diff.size == 0:
        return None
    i, j = int(diff[0][0]) + 1, int(diff[0][1]) + 1
    return i, j


# -- subcommands -----------------------------------------------------------


def cmd_solve(args) -> int:
    g = _load_graph(args)
    t0 = time.perf_counter()
    result = solve(g, _params(args))
    elapsed = time.perf_counter() - t0
    if args.out:
        with open(args.out, "w") as fh:
            write_distance_matrix(result.distances, fh)
    if args.pred:
        with open(args.pred, "w") as fh:
            write_precedence_matrix(result.precedence, fh)
    st = g.stats()
    print(f"n={st.n} m={st.m} removals={result.removals} "
          f"residual_order={result.residual_order} "
          f"max_removed_degree={result.max_removed_degree} "
          f"wall_seconds={elapsed:.3f}")
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args)
    result = solve(g, _params(args))

    if args.expected:
        expected = read_distance_matrix(Path(args.expected).read_text())
        if expected.order != g.n_original:
            raise CliError(f"expected matrix order {expected.order} != n {g.n_original}")
        loc = _first_mismatch(result.distances.cells, expected.cells)
        if loc is not None:
            i, j = loc
            print(f"FAIL: cell ({i},{j}): pipeline={result.distances.get(i, j)} "
                  f"expected={expected.get(i, j)}", file=sys.stderr)
            return 1

    m_db, _ = apsp_dijkstra(g)
    loc = _first_mismatch(result.distances.cells, m_db.cells)
    if loc is not None:
        i, j = loc
        print(f"FAIL: cell ({i},{j}): pipeline={result.distances.get(i, j)} "
              f"dijkstra={m_db.get(i, j)}", file=sys.stderr)
        return 1

    if g.n_original <= ORACLE_CAP:
        m_fw = floyd_warshall(g)
        loc = _first_mismatch(result.distances.cells, m_fw.cells)
        if loc is not None:
            i, j = loc
            print(f"FAIL: cell ({i},{j}): pipeline={result.distances.get(i, j)} "
                  f"floyd_warshall={m_fw.get(i, j)}", file=sys.stderr)
            return 1

    rng = random.Random(args.seed)
    vertices = sorted(g.adj)
    for _ in range(args.sample):
        i, j = rng.sample(vertices, 2)
        path = reconstruct_path(result.precedence, g, i, j)
        w = path_weight(g, path)
        if w != result.distances.get(i, j):
            print(f"FAIL: path ({i},{j}) weighs {w}, matrix says "
                  f"{result.distances.get(i, j)}", file=sys.stderr)
            return 1

    print(f"OK: n={g.n_original}, matrices agree, {args.sample} paths sound")
    return 0


def cmd_bench(args) -> int:
    g = _load_graph(args)
    params = _params(args)
    workers = 1 if args.db_single_thread else 4

    pa_times, db_times = [], []
    result = None
    for _ in range(args.repeats):
        t0 = time.perf_counter()
        result = solve(g, params)
        pa_times.append(time.perf_counter() - t0)
    for _ in range(args.repeats):
        t0 = time.perf_counter()
        m_db, _ = apsp_dijkstra(g, workers=workers)
        db_times.append(time.perf_counter() - t0)

    equal = _first_mismatch(result.distances.cells, m_db.cells) is None
    st = g.stats()
    pa, db = min(pa_times), min(db_times)
    row = {
        "instance": Path(args.input).stem,
        "n": st.n,
        "m": st.m,
        "pa_seconds": f"{pa:.6f}",
        "db_seconds": f"{db:.6f}",
        "speedup": f"{db / pa:.3f}",
        "removals": result.removals,
        "residual_order": result.residual_order,
        "max_removed_degree": result.max_removed_degree,
        "matrices_equal": equal,
    }
    if args.report:
        path = Path(args.report)
        new_file = not path.exists()
        with open(path, "a", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=REPORT_COLUMNS)
            if new_file:
                writer.writeheader()
            writer.writerow(row)
    print(",".join(str(row[c]) for c in REPORT_COLUMNS))
    if not equal:
        print("FAIL: PA and DB matrices differ", file=sys.stderr)
        return 1
    return 0


def cmd_subgraph(args) -> int:
    g = _load_graph(args, check_cap=False)
    sub, _ = extract_connected_subgraph(g, args.size, args.seed)
    text = write_dimacs(sub)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_stats(args) -> int:
    g = _load_graph(args, require_connected=False, check_cap=False)
    st = g.stats()
    print(f"{Path(args.input).stem},{st.n},{st.m},{float(st.avg_degree):.4f},{st.max_degree}")
    return 0


# -- argument wiring --------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="DIMACS 'p sp' graph file")
    sub.add_argument("--dmax", type=_int_or_inf, default=UNBOUNDED,
                     help="max degree of removable vertices (default inf)")
    sub.add_argument("--imax", type=_int_or_inf, default=UNBOUNDED,
                     help="max edge-count increase per removal (default inf)")
    sub.add_argument("--nmin", type=int, default=1,
                     help="target residual order (default 1)")
    sub.add_argument("--seed", type=int, default=1)
    sub.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                     help=f"refuse graphs larger than this (default {DEFAULT_MAX_N})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphshrink",
        description="All-pairs shortest paths by graph contraction, with "
                    "oracle verification and benchmarking.")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("solve", help="solve an instance, write matrices")
    _add_common(sp)
    sp.add_argument("--out", help="distance matrix output path")
    sp.add_argument("--pred", help="precedence matrix output path")
    sp.set_defaults(func=cmd_solve)

    sp = subs.add_parser("verify", help="solve and check against the oracles")
    _add_common(sp)
    sp.add_argument("--sample", type=int, default=50,
                    help="random vertex pairs to path-check (default 50)")
    sp.add_argument("--expected", help="distance matrix file to compare against")
    sp.set_defaults(func=cmd_verify)

    sp = subs.add_parser("bench", help="time the pipeline against all-sources Dijkstra")
    _add_common(sp)
    sp.add_argument("--repeats", type=int, default=3, help="best-of runs (default 3)")
    sp.add_argument("--report", help="CSV report path (appended)")
    sp.add_argument("--db-single-thread", type=_bool_flag, default=True,
                    help="run the Dijkstra baseline single-threaded (default true)")
    sp.set_defaults(func=cmd_bench)

    sp = subs.add_parser("subgraph", help="extract a connected BFS-ball subgraph")
    _add_common(sp)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--out", help="DIMACS output path (default stdout)")
    sp.set_defaults(func=cmd_subgraph)

    sp = subs.add_parser("stats", help="print instance,n,m,avg_degree,max_degree")
    _add_common(sp)
    sp.set_defaults(func=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
