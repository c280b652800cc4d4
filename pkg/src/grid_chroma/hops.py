"""Unit-disk neighborhoods and exact hop distances on the infinite grid."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .geometry import IntVec2

SQRT2 = math.sqrt(2.0)


def as_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float.

    Floats go through ``repr`` so ``1.5`` and ``"1.5"`` agree.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class RadioParams:
    """Radio range ``range`` (in grid steps) and hop count ``hops`` of a coloring problem."""

    range: Fraction
    hops: int

    def __post_init__(self):
        r = as_fraction(self.range)
        if r < 1:
            raise ValueError("range must be >= 1")
        if int(self.hops) != self.hops or self.hops < 1:
            raise ValueError("hops must be a positive integer")
        object.__setattr__(self, "range", r)
        object.__setattr__(self, "hops", int(self.hops))

    @property
    def above_sqrt2(self) -> bool:
        """Exact test for ``R > sqrt(2)``."""
        return self.range * self.range > 2

    @property
    def reach(self) -> Fraction:
        """``h * R``, the largest distance an h-hop path can cover."""
        return self.hops * self.range


def within_range_sq(dist_sq: int, r: Fraction) -> bool:
    """Exact ``sqrt(dist_sq) <= r`` for rational ``r``."""
    return dist_sq * r.denominator ** 2 <= r.numerator ** 2


def are_neighbors(a, b, params: RadioParams) -> bool:
    dx, dy = a[0] - b[0], a[1] - b[1]
    d2 = dx * dx + dy * dy
    return d2 > 0 and within_range_sq(d2, params.range)


def neighbor_offsets(r: Fraction) -> list[IntVec2]:
    """All nonzero offsets at Euclidean distance at most ``r``."""
    r = as_fraction(r)
    k = math.floor(r)
    return [
        IntVec2(dx, dy)
        for dy in range(-k, k + 1)
        for dx in range(-k, k + 1)
        if (dx or dy) and within_range_sq(dx * dx + dy * dy, r)
    ]


def _dilate(frontier: np.ndarray, offsets) -> np.ndarray:
    """Union of ``frontier`` shifted by every offset (arrays indexed ``[y, x]``)."""
    ny, nx = frontier.shape
    out = np.zeros_like(frontier)
    for dx, dy in offsets:
        if abs(dx) >= nx or abs(dy) >= ny:
            continue
        ys, yd = (slice(0, ny - dy), slice(dy, ny)) if dy >= 0 else (slice(-dy, ny), slice(0, ny + dy))
        xs, xd = (slice(0, nx - dx), slice(dx, nx)) if dx >= 0 else (slice(-dx, nx), slice(0, nx + dx))
        out[yd, xd] |= frontier[ys, xs]
    return out


def bfs_hops(start: np.ndarray, offsets, max_hops: int, allowed: np.ndarray | None = None) -> np.ndarray:
    """Level-synchronous BFS over a boolean grid.

    Returns an int array holding the hop count from the start set for every
    cell reached within ``max_hops`` and ``max_hops + 1`` elsewhere. Cells
    outside ``allowed`` are never entered.
    """
    hops = np.full(start.shape, max_hops + 1, dtype=np.int32)
    hops[start] = 0
    seen = start.copy()
    frontier = start.copy()
    for k in range(1, max_hops + 1):
        nxt = _dilate(frontier, offsets) & ~seen
        if allowed is not None:
            nxt &= allowed
        if not nxt.any():
            break
        hops[nxt] = k
        seen |= nxt
        frontier = nxt
    return hops


@dataclass(frozen=True, eq=False)
class HopField:
    """Hop counts from the origin over the box ``[-radius_box, radius_box]^2``.

    Counts above ``params.hops`` are not tracked: :meth:`hops` returns
    ``None`` for them and for any offset outside the box.
    """

    params: RadioParams
    radius_box: int
    table: np.ndarray = field(repr=False)
    _reachable: tuple = field(repr=False, default=())

    def hops(self, w) -> int | None:
        b = self.radius_box
        x, y = w[0], w[1]
        if -b <= x <= b and -b <= y <= b:
            v = int(self.table[y + b, x + b])
            if v <= self.params.hops:
                return v
        return None

    def within(self, w) -> bool:
        return self.hops(w) is not None

    def hop_of(self, w) -> int | float:
        """Like :meth:`hops` with ``math.inf`` in place of ``None``."""
        v = self.hops(w)
        return math.inf if v is None else v

    def reachable(self) -> tuple:
        """``(offset, hops)`` for every nonzero offset within ``params.hops`` hops,
        ordered by hop count, squared length, then decreasing x and y."""
        return self._reachable


def hop_box_radius(params: RadioParams) -> int:
    return math.ceil(params.reach) + 1


@lru_cache(maxsize=64)
def build_hop_field(params: RadioParams) -> HopField:
    """Exact hop counts from the origin up to ``params.hops``.

    An h-hop path never leaves the disk of radius ``h*R`` around its start,
    so a BFS confined to the box of radius ``ceil(h*R) + 1`` is exact.
    """
    b = hop_box_radius(params)
    n = 2 * b + 1
    start = np.zeros((n, n), dtype=bool)
    start[b, b] = True
    table = bfs_hops(start, neighbor_offsets(params.range), params.hops)
    table.setflags(write=False)
    ys, xs = np.nonzero((table >= 1) & (table <= params.hops))
    entries = [(IntVec2(int(x) - b, int(y) - b), int(table[y, x])) for y, x in zip(ys, xs)]
    entries.sort(key=lambda e: (e[1], e[0].norm2(), -e[0].x, -e[0].y))
    return HopField(params, b, table, tuple(entries))


def hops_between(a, b, field: HopField) -> int | None:
    """Hop count between grid nodes ``a`` and ``b``, or ``None`` if more than h."""
    return field.hops((b[0] - a[0], b[1] - a[1]))


def lemma_bounds_check(w, params: RadioParams, field: HopField) -> bool:
    """Check the two distance/hop inequalities at offset ``w``.

    * ``|w| <= (R - sqrt 2) h`` implies at most h hops (only when R > sqrt 2);
    * ``|w| > h R`` implies more than h hops.

    The irrational threshold in the first test is shrunk by a small
    margin so floating point can only skip a borderline case.
    """
    d2 = w[0] * w[0] + w[1] * w[1]
    hop = field.hops(w)
    ok = True
    if params.above_sqrt2:
        near = (float(params.range) - SQRT2) * params.hops
        if math.sqrt(d2) <= near - 1e-9:
            ok = ok and hop is not None
    if not within_range_sq(d2, params.reach):
        ok = ok and hop is None
    return ok
