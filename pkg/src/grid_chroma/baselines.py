"""Greedy FirstFit h-hop coloring of a finite grid under priority orders.

Distances here are hop counts inside the ``W x H`` grid. On a rectangle
they equal the infinite-grid hop counts: clamping every node of a path into
the rectangle shrinks each step componentwise, so the clamped path has the
same length and stays inside. :func:`finite_grid_hops` computes the
confined BFS directly so this equality can be checked.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass

import numpy as np

from .coloring import GridColoring, Method
from .geometry import IntVec2
from .hops import RadioParams, bfs_hops, build_hop_field, neighbor_offsets


class Priority(str, enum.Enum):
    LINE_COLUMN = "line"
    DIAGONAL = "diagonal"
    DIAGONAL_BAND = "diagonal-band"
    CENTER_DISTANCE = "center"
    RANDOM = "random"


@dataclass(frozen=True)
class PriorityHeuristic:
    kind: Priority
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Priority(self.kind))
        if self.kind is Priority.RANDOM and self.seed is None:
            object.__setattr__(self, "seed", 0)


def priority_order(width: int, height: int, heuristic: PriorityHeuristic) -> list[IntVec2]:
    """Nodes of the grid, highest priority first.

    * line: row by row, ``(y, x)``;
    * diagonal: anti-diagonals, ``(x + y, x)``;
    * diagonal-band: distance to the main diagonal, ``(|x - y|, x + y, x)``;
    * center: squared distance to ``((W-1)/2, (H-1)/2)``, then ``(y, x)``;
    * random: row-major list shuffled by ``random.Random(seed)``
      (Mersenne Twister driving a Fisher-Yates shuffle).
    """
    if width < 1 or height < 1:
        raise ValueError("grid must be at least 1x1")
    nodes = [IntVec2(x, y) for y in range(height) for x in range(width)]
    kind = heuristic.kind
    if kind is Priority.LINE_COLUMN:
        return nodes
    if kind is Priority.DIAGONAL:
        return sorted(nodes, key=lambda n: (n.x + n.y, n.x))
    if kind is Priority.DIAGONAL_BAND:
        return sorted(nodes, key=lambda n: (abs(n.x - n.y), n.x + n.y, n.x))
    if kind is Priority.CENTER_DISTANCE:
        # doubled coordinates keep the center integral
        return sorted(nodes, key=lambda n: ((2 * n.x - width + 1) ** 2 + (2 * n.y - height + 1) ** 2, n.y, n.x))
    rng = random.Random(heuristic.seed)
    rng.shuffle(nodes)
    return nodes


def finite_grid_hops(width: int, height: int, params: RadioParams, source) -> np.ndarray:
    """Hop counts from ``source`` with paths confined to the grid, indexed ``[y, x]``.

    Cells more than ``h`` hops away hold ``h + 1``.
    """
    start = np.zeros((height, width), dtype=bool)
    start[source[1], source[0]] = True
    return bfs_hops(start, neighbor_offsets(params.range), params.hops)


def greedy_color(width: int, height: int, params: RadioParams, heuristic: PriorityHeuristic) -> GridColoring:
    """FirstFit: each node in priority order takes the smallest color unused
    by already colored nodes within ``h`` hops."""
    offsets = [w for w, _ in build_hop_field(params).reachable()]
    colors = np.full((height, width), -1, dtype=np.int64)
    for node in priority_order(width, height, heuristic):
        used = set()
        for dx, dy in offsets:
            x, y = node.x + dx, node.y + dy
            if 0 <= x < width and 0 <= y < height:
                c = colors[y, x]
                if c >= 0:
                    used.add(int(c))
        c = 0
        while c in used:
            c += 1
        colors[node.y, node.x] = c
    return GridColoring(width, height, IntVec2(0, 0), params, None, Method.GREEDY, colors, heuristic)
