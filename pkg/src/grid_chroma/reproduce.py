"""Regenerate the reference tables from scratch."""
from __future__ import annotations

from dataclasses import dataclass

from .baselines import Priority, PriorityHeuristic, greedy_color
from .coloring import color_window
from .hops import RadioParams
from .published import GREEDY_PRIORITIES, GREEDY_VS_LATTICE, OPTIMAL_COUNTS, RANGES
from .search import find_optimal

# published "diagonal" counts are compared against the band order; the
# anti-diagonal sweep is reported next to it
TABLE1_PRIORITY = {
    "line": Priority.LINE_COLUMN,
    "diagonal": Priority.DIAGONAL_BAND,
    "center": Priority.CENTER_DISTANCE,
    "random": Priority.RANDOM,
}


@dataclass(frozen=True)
class OptimumRow:
    range: str
    hops: int
    vectors: list
    computed: int
    published: int

    @property
    def ok(self) -> bool:
        return self.computed == self.published


@dataclass(frozen=True)
class GreedyRow:
    side: int
    priority: str
    range: str
    computed: int
    published: int
    alternative: int | None = None


@dataclass(frozen=True)
class ComparisonRow:
    range: str
    side: int
    lattice: int
    lattice_published: int
    greedy: int
    greedy_published: int


def optimum_rows(hops=(2, 3)) -> list[OptimumRow]:
    rows = []
    for h in hops:
        for r in RANGES:
            res = find_optimal(RadioParams(r, h))
            rows.append(OptimumRow(r, h, res.basis.as_list(), res.num_colors, OPTIMAL_COUNTS[(r, h)]))
    return rows


def greedy_rows(seed: int = 0) -> list[GreedyRow]:
    rows = []
    for (side, name), values in GREEDY_PRIORITIES.items():
        for r, pub in values.items():
            params = RadioParams(r, 3)
            got = greedy_color(side, side, params, PriorityHeuristic(TABLE1_PRIORITY[name], seed)).num_colors
            alt = None
            if name == "diagonal":
                alt = greedy_color(side, side, params, PriorityHeuristic(Priority.DIAGONAL)).num_colors
            rows.append(GreedyRow(side, name, r, got, pub, alt))
    return rows


def comparison_rows() -> list[ComparisonRow]:
    """Both colorers on the same ``side x side`` window; the lattice count is the
    number of distinct colors actually present in the window."""
    rows = []
    optima = {}
    for (r, side), (lat_pub, greedy_pub) in GREEDY_VS_LATTICE.items():
        params = RadioParams(r, 3)
        if r not in optima:
            optima[r] = find_optimal(params).basis
        lat = color_window((0, 0), side, side, optima[r], params=params).distinct_colors()
        g = greedy_color(side, side, params, PriorityHeuristic(Priority.LINE_COLUMN)).num_colors
        rows.append(ComparisonRow(r, side, lat, lat_pub, g, greedy_pub))
    return rows
