"""Vertex grids: the vertices of K_v laid out so row neighbours differ by a fixed step.

Cells are addressed 1-based, ``m(i, j)`` for row ``i`` and column ``j``, to
match how the constructions are usually written down.  Rows may have
different lengths (the incomplete layout).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import InvalidInput, PreconditionViolation


@dataclass(frozen=True)
class VertexGrid:
    v: int
    rows: tuple[tuple[int, ...], ...]
    step: int
    layout: str

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return max(len(r) for r in self.rows)

    def m(self, i: int, j: int) -> int:
        if i < 1 or j < 1 or i > len(self.rows) or j > len(self.rows[i - 1]):
            raise PreconditionViolation(f"cell ({i},{j}) is outside the {self.layout} grid")
        return self.rows[i - 1][j - 1]

    def cells(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def position(self) -> dict[int, tuple[int, int]]:
        return {x: (i + 1, j + 1) for i, row in enumerate(self.rows) for j, x in enumerate(row)}

    def check_distinct(self) -> None:
        cells = self.cells()
        if len(set(cells)) != len(cells):
            raise InvalidInput(f"{self.layout} grid repeats a vertex")

    def row_steps_ok(self) -> bool:
        v, s = self.v, self.step
        return all((row[k + 1] - row[k]) % v == s % v for row in self.rows for k in range(len(row) - 1))

    def as_array(self, fill: int = -1) -> np.ndarray:
        out = np.full((self.n_rows, self.n_cols), fill, dtype=np.int64)
        for i, row in enumerate(self.rows):
            out[i, : len(row)] = row
        return out

    def odd_rows(self, used: set[int]) -> list[int]:
        """1-based rows whose unused cells cannot be split into adjacent pairs."""
        return [i + 1 for i, row in enumerate(self.rows) if any(len(run) % 2 for run in _runs(row, used))]

    def complete(self, used: set[int], isolated: int | None = None) -> tuple[list[tuple[int, int]], int]:
        """Pair the unused cells of every row into row-adjacent edges.

        Exactly one cell may be left over; it becomes the isolated vertex.  With
        ``isolated`` given, that cell is skipped and must split its run evenly.
        """
        edges: list[tuple[int, int]] = []
        leftover: list[int] = []
        for row in self.rows:
            for run in _runs(row, used):
                if isolated is not None and isolated in run:
                    k = run.index(isolated)
                    pieces = [run[:k], run[k + 1 :]]
                    leftover.append(isolated)
                else:
                    pieces = [run]
                for piece in pieces:
                    for k in range(0, len(piece) - 1, 2):
                        edges.append((piece[k], piece[k + 1]))
                    if len(piece) % 2:
                        leftover.append(piece[-1])
        if len(leftover) != 1:
            raise PreconditionViolation(
                f"row completion left {len(leftover)} unpaired cells (need exactly 1)"
            )
        return edges, leftover[0]

    def render(self, used: set[int] | None = None, isolated: int | None = None) -> str:
        width = len(str(self.v - 1))
        lines = []
        for row in self.rows:
            cells = []
            for x in row:
                s = str(x).rjust(width)
                if x == isolated:
                    s = f"({s})"
                elif used and x in used:
                    s = f"[{s}]"
                else:
                    s = f" {s} "
                cells.append(s)
            lines.append(" ".join(cells))
        return "\n".join(lines)


def _runs(row: tuple[int, ...], used: set[int]) -> list[list[int]]:
    runs, cur = [], []
    for x in row:
        if x in used:
            if cur:
                runs.append(cur)
            cur = []
        else:
            cur.append(x)
    if cur:
        runs.append(cur)
    return runs


def build_xy_grid(v: int, x: int, y: int, d2: int) -> VertexGrid:
    """``d2 x (v/d2)`` grid with ``m(i,j) = (i-1)x + (j-1)y mod v``."""
    if d2 <= 1 or v % d2 or math.gcd(v, y) != d2 or math.gcd(x, d2) != 1:
        raise InvalidInput(f"need d2 = gcd(v, y) > 1 and gcd(x, d2) = 1 (v={v}, x={x}, y={y}, d2={d2})")
    cols = v // d2
    i = np.arange(d2)[:, None]
    j = np.arange(cols)[None, :]
    arr = (i * x + j * y) % v
    g = VertexGrid(v, tuple(tuple(int(c) for c in r) for r in arr), y, "xy")
    g.check_distinct()
    return g


def build_notcop_grid(v: int, t: int, d: int) -> VertexGrid:
    """``d x (v/d)`` grid, rows start at 0,2,1,3,4,6,5,7,... and step by t."""
    if d <= 1 or math.gcd(t, v) != d:
        raise InvalidInput(f"need d = gcd(t, v) > 1 (v={v}, t={t}, d={d})")
    cols = v // d
    rows = []
    for i in range(1, d + 1):
        start = {0: i - 1, 1: i - 1, 2: i, 3: i - 2}[i % 4]
        rows.append(tuple((start + j * t) % v for j in range(cols)))
    g = VertexGrid(v, tuple(rows), t, "notcop")
    g.check_distinct()
    return g


def build_cop_grid(v: int, t: int) -> VertexGrid:
    """Incomplete ``t x (q+1)`` grid ``m(i,j) = (i-1) + (j-1)t`` over ``0..v-1`` (v = qt + r)."""
    if t < 2 or t >= v:
        raise InvalidInput(f"need 2 <= t < v (v={v}, t={t})")
    rows = tuple(tuple(range(i, v, t)) for i in range(t))
    return VertexGrid(v, rows, t, "cop")
