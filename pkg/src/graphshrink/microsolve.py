"""Exact APSP on the residual graph and merge into the global matrices."""

from __future__ import annotations

import heapq

from .graph import INF, Graph
from .matrices import UNSET, DistanceMatrix, PrecedenceMatrix


def dijkstra(g: Graph, source: int) -> tuple[dict[int, float], dict[int, int | None]]:
    """Single-source distances/predecessors over the present vertices.

    Binary heap with lazy deletion; predecessor of the source is None,
    unreachable vertices stay at INF.
    """
    g._require(source)
    dist: dict[int, float] = {v: INF for v in g.adj}
    pred: dict[int, int | None] = {v: None for v in g.adj}
    dist[source] = 0
    heap: list[tuple[float, int]] = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w in g.adj[u].items():
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, pred


def solve_residual(g_r: Graph, m: DistanceMatrix, p: PrecedenceMatrix,
                   scale: int = 1, hop_cells=None) -> None:
    """Fill M for residual pairs and merge residual predecessors into P.

    A one-vertex residual is a no-op (the diagonal is preset).  For every
    other pair (i, j) the residual predecessor q of j is expanded through
    any contraction structure on the residual edge (q, j): the final entry
    is P[q][j] when that edge is itself a shortcut, plain q otherwise.  The
    merge only touches entries that are still unset or whose direct residual
    edge is longer than the residual distance.

    When driven by the full pipeline the residual weights arrive in the
    hop-augmented encoding (see solver.solve); `scale` splits each distance
    back into its weight part (stored in M) and hop part (stored in
    `hop_cells` when given).  The default scale of 1 is the plain raw-weight
    behavior.
    """
    present = sorted(g_r.adj)
    if len(present) <= 1:
        return
    for i in present:
        dist, pred = dijkstra(g_r, i)
        m.cells[i, present] = [dist[j] // scale for j in present]
        if hop_cells is not None:
            hop_cells[i, present] = [dist[j] % scale for j in present]
        for j in present:
            if j == i:
                continue
            if p.get(i, j) != UNSET and g_r.adj[i].get(j, INF) <= dist[j]:
                continue
            q = pred[j]
            if q is None or q == i:
                continue  # direct residual hop: the stored entry already applies
            pqj = p.get(q, j)
            p.set(i, j, pqj if pqj != UNSET else q)
