"""Full pipeline: contract, solve the residual, replay removals in reverse."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .assembly import assemble
from .disassembly import ShrinkSequence, SolveParams, disassemble
from .graph import Graph
from .matrices import DistanceMatrix, PrecedenceMatrix
from .microsolve import solve_residual


@dataclass
class SolveResult:
    distances: DistanceMatrix
    precedence: PrecedenceMatrix
    removals: int
    residual_order: int
    max_removed_degree: int
    sequence: ShrinkSequence


def solve(g: Graph, params: SolveParams = SolveParams()) -> SolveResult:
    """Compute the full distance and precedence matrices of a connected graph.

    Works on a private copy of g.  With the default parameters (everything
    unbounded, n_min = 1) the graph contracts to a single vertex and the
    residual solve is skipped entirely.

    Internally every edge weight w is encoded as w * (n + 1) + 1, so all
    comparisons are lexicographic in (weight, hop count).  Zero-weight edges
    then still carry strictly positive internal cost, which keeps the
    precedence entries acyclic when many distances tie at zero; no simple
    path has more than n - 1 hops, so the hop component never overflows into
    the weight part.  The reported matrix holds the decoded weight part.
    """
    work = g.copy()
    n = g.n_original
    scale = n + 1
    for nbrs in work.adj.values():
        for v in nbrs:
            nbrs[v] = nbrs[v] * scale + 1
    m = DistanceMatrix(n)
    p = PrecedenceMatrix(n)
    hops = np.zeros_like(m.cells, dtype=np.int64)
    seq = disassemble(work, params, p)
    solve_residual(seq.residual, m, p, scale=scale, hop_cells=hops)
    assemble(seq, m, p, scale=scale, hop_cells=hops)
    return SolveResult(
        distances=m,
        precedence=p,
        removals=len(seq.records),
        residual_order=seq.residual.n_present,
        max_removed_degree=seq.max_removed_degree,
        sequence=seq,
    )
