"""DIMACS shortest-path format ('p sp' / 'a u v w' lines).

Input may describe a directed multigraph; it is folded into a simple
undirected graph: duplicate arcs for the same unordered pair keep the
minimum weight, self-loop arcs are dropped.
"""

from __future__ import annotations

from typing import IO, Iterable

from .graph import MAX_WEIGHT, Graph


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str | bytes | Iterable[str]) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = text.splitlines() if isinstance(text, str) else text

    g: Graph | None = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if g is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(fields) != 4 or fields[1] != "sp":
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}") from None
            if n < 1:
                raise DimacsError(f"line {lineno}: vertex count must be positive")
            g = Graph(n)
        elif fields[0] == "a":
            if g is None:
                raise DimacsError(f"line {lineno}: arc before problem line")
            if len(fields) != 4:
                raise DimacsError(f"line {lineno}: malformed arc line {line!r}")
            try:
                u, v, w = int(fields[1]), int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed arc line {line!r}") from None
            if not (1 <= u <= g.n_original and 1 <= v <= g.n_original):
                raise DimacsError(f"line {lineno}: arc ({u},{v}) references id > {g.n_original}")
            if w < 0:
                raise DimacsError(f"line {lineno}: negative weight {w}")
            if w > MAX_WEIGHT:
                raise DimacsError(f"line {lineno}: weight {w} exceeds {MAX_WEIGHT}")
            if u == v:
                continue
            cur = g.adj[u].get(v)
            if cur is None or w < cur:
                g.set_edge(u, v, w)
        else:
            raise DimacsError(f"line {lineno}: unrecognized line {line!r}")
    if g is None:
        raise DimacsError("no problem line found")
    return g


def write_dimacs(g: Graph, out: IO[str] | None = None) -> str | None:
    """Emit the graph; each undirected edge becomes two arc lines, ascending
    (u, v).  Round-trips through parse_dimacs for fully-present graphs."""
    chunks = [
        "c graphshrink export\n",
        f"p sp {g.n_original} {2 * g.m}\n",
    ]
    for u, v, w in g.edges():
        chunks.append(f"a {u} {v} {w}\n")
        chunks.append(f"a {v} {u} {w}\n")
    text = "".join(chunks)
    if out is None:
        return text
    out.write(text)
    return None
