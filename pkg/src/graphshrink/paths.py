"""Explicit shortest paths out of a precedence matrix."""

from __future__ import annotations

from .graph import INF, Graph
from .matrices import UNSET, PrecedenceMatrix


class PathError(ValueError):
    """The precedence matrix is inconsistent with the graph."""


def reconstruct_path(p: PrecedenceMatrix, g0: Graph, i: int, j: int) -> list[int]:
    """Vertex sequence of the shortest i -> j path, built back to front.

    An unset entry means the last hop is the direct edge from i.  The walk
    is iterative and guarded, so a corrupt matrix raises instead of looping.
    """
    if i == j:
        raise PathError("reconstruct_path requires i != j")
    path = [j]
    seen = {j}
    cur = j
    while cur != i:
        q = p.get(i, cur)
        pred = q if q != UNSET else i
        if pred in seen:
            raise PathError(f"predecessor cycle at vertex {pred} for pair ({i},{j})")
        if pred not in g0.adj or cur not in g0.adj[pred]:
            raise PathError(f"consecutive pair ({pred},{cur}) not adjacent for pair ({i},{j})")
        if len(path) > g0.n_original:
            raise PathError(f"path for pair ({i},{j}) exceeds {g0.n_original} vertices")
        path.append(pred)
        seen.add(pred)
        cur = pred
    path.reverse()
    return path


def path_weight(g0: Graph, path: list[int]):
    """Sum of edge weights along the sequence; INF on a non-adjacent pair."""
    if not path:
        raise PathError("empty path")
    total = 0
    for a, b in zip(path, path[1:]):
        w = g0.adj[a].get(b) if a in g0.adj else None
        if w is None:
            return INF
        total += w
    return total
