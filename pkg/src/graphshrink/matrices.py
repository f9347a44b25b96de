"""Distance and precedence matrices indexed by 1-based vertex id.

Both are allocated once at full (n+1) x (n+1) (row/col 0 unused) and filled
in place as the pipeline progresses; which cells are meaningful at a given
stage is tracked by the caller's present set.

Distances live in float64: every value is an integer (or inf), and with
weights <= 2^32 - 1 and realistic path lengths all sums stay far below
2^53, so equality checks are exact.
"""

from __future__ import annotations

from typing import IO

import numpy as np

from .graph import INF

#: PrecedenceMatrix cell value meaning "no stored predecessor": the path's
#: last hop is the direct edge from the row vertex.  Vertex ids are 1-based
#: so 0 is free.
UNSET = 0


class DistanceMatrix:
    __slots__ = ("order", "cells")

    def __init__(self, order: int):
        self.order = order
        self.cells = np.full((order + 1, order + 1), np.inf, dtype=np.float64)
        np.fill_diagonal(self.cells, 0.0)

    def get(self, i: int, j: int):
        v = self.cells[i, j]
        return INF if np.isinf(v) else int(v)

    def set(self, i: int, j: int, value) -> None:
        self.cells[i, j] = value


class PrecedenceMatrix:
    __slots__ = ("order", "cells")

    def __init__(self, order: int):
        self.order = order
        self.cells = np.zeros((order + 1, order + 1), dtype=np.int32)

    def get(self, i: int, j: int) -> int:
        """Predecessor id, or UNSET (0)."""
        return int(self.cells[i, j])

    def set(self, i: int, j: int, value: int) -> None:
        self.cells[i, j] = value

    def is_set(self, i: int, j: int) -> bool:
        return self.cells[i, j] != UNSET


# -- text serialization --------------------------------------------------
# Row-major, one row per line, space-separated integers, "INF" sentinel,
# '#' header lines carrying the order and the vertex-id order.


def _write_cells(cells: np.ndarray, order: int, kind: str, out: IO[str],
                 sentinel_value) -> None:
    out.write(f"# graphshrink {kind} matrix\n")
    out.write(f"# n {order}\n")
    out.write("# ids " + " ".join(str(i) for i in range(1, order + 1)) + "\n")
    for i in range(1, order + 1):
        row = cells[i, 1:]
        parts = ["INF" if v == sentinel_value else str(int(v)) for v in row]
        out.write(" ".join(parts) + "\n")


def write_distance_matrix(m: DistanceMatrix, out: IO[str]) -> None:
    _write_cells(m.cells, m.order, "distance", out, np.inf)


def write_precedence_matrix(p: PrecedenceMatrix, out: IO[str]) -> None:
    _write_cells(p.cells, p.order, "precedence", out, UNSET)


def _read_rows(text: str) -> tuple[int, list[list[str]]]:
    order = None
    rows: list[list[str]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "n":
                order = int(fields[1])
            continue
        rows.append(line.split())
    if order is None:
        raise ValueError("missing '# n <order>' header line")
    if len(rows) != order or any(len(r) != order for r in rows):
        raise ValueError(f"expected {order} rows of {order} cells")
    return order, rows


def read_distance_matrix(text: str) -> DistanceMatrix:
    order, rows = _read_rows(text)
    m = DistanceMatrix(order)
    for i, row in enumerate(rows, start=1):
        m.cells[i, 1:] = [np.inf if c == "INF" else int(c) for c in row]
    return m


def read_precedence_matrix(text: str) -> PrecedenceMatrix:
    order, rows = _read_rows(text)
    p = PrecedenceMatrix(order)
    for i, row in enumerate(rows, start=1):
        p.cells[i, 1:] = [UNSET if c == "INF" else int(c) for c in row]
    return p
