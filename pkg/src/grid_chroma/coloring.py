"""Node color computation for a lattice-periodic coloring.

Two schemes are provided. NCC1 computes the coordinate pair of a node inside
its fundamental parallelogram and maps the pair to a color through a sorted
palette. NCC2 splits the generators by the gcd of their coordinates and
computes the color in closed form, with no table.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .geometry import GeneratorBasis, IntVec2, det, euclid_mod, gcd_nonneg
from .hops import RadioParams


class Method(str, enum.Enum):
    NCC1 = "ncc1"
    NCC2 = "ncc2"
    GREEDY = "greedy"


class ColorPair(NamedTuple):
    c1: int
    c2: int


def color_pair_ncc1(w, basis: GeneratorBasis) -> ColorPair:
    u1, u2, d = basis.u1, basis.u2, basis.d
    x, y = w[0], w[1]
    return ColorPair(euclid_mod(x * u2.y - y * u2.x, d), euclid_mod(-x * u1.y + y * u1.x, d))


@dataclass(frozen=True)
class Ncc1Palette:
    basis: GeneratorBasis
    table: tuple[ColorPair, ...]
    index: dict = field(repr=False, compare=False)


def build_palette(basis: GeneratorBasis) -> Ncc1Palette:
    """Sorted list of all attainable color pairs for ``basis``.

    The pairs are collected over the bounding box of the fundamental
    parallelogram, which is enough to see every value.
    """
    u1, u2 = basis.u1, basis.u2
    corners = [(0, 0), tuple(u1), tuple(u2), tuple(u1 + u2)]
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    pairs = {
        color_pair_ncc1((x, y), basis)
        for y in range(min(ys), max(ys) + 1)
        for x in range(min(xs), max(xs) + 1)
    }
    table = tuple(sorted(pairs))
    if len(table) != basis.d:
        raise RuntimeError(f"palette has {len(table)} entries, expected {basis.d}")
    return Ncc1Palette(basis, table, {p: i for i, p in enumerate(table)})


def color_ncc1(w, palette: Ncc1Palette) -> int:
    pair = color_pair_ncc1(w, palette.basis)
    try:
        return palette.index[pair]
    except KeyError:
        raise RuntimeError(f"color pair {pair} missing from palette") from None


@dataclass(frozen=True)
class Ncc2Decomposition:
    """``u1 = g1*v1``, ``u2 = g2*v2`` with primitive ``v1, v2`` and ``d = g1*g2*dprime``."""

    g1: int
    g2: int
    v1: IntVec2
    v2: IntVec2
    dprime: int

    @property
    def d(self) -> int:
        return self.g1 * self.g2 * self.dprime


def decompose_ncc2(basis: GeneratorBasis) -> Ncc2Decomposition:
    u1, u2 = basis.u1, basis.u2
    g1 = gcd_nonneg(u1.x, u1.y)
    g2 = gcd_nonneg(u2.x, u2.y)
    v1 = IntVec2(u1.x // g1, u1.y // g1)
    v2 = IntVec2(u2.x // g2, u2.y // g2)
    dprime, rem = divmod(basis.d, g1 * g2)
    assert rem == 0 and dprime == det(v1, v2)
    return Ncc2Decomposition(g1, g2, v1, v2, dprime)


def ncc2_components(w, decomp: Ncc2Decomposition) -> tuple[int, int, int]:
    """``(c', x', y')``: color inside the small tile and the tile's coordinates."""
    a = det(w, decomp.v2)
    b = det(decomp.v1, w)
    # floor division is the mathematical floor, also for negative numerators
    return a % decomp.dprime, (a // decomp.dprime) % decomp.g1, (b // decomp.dprime) % decomp.g2


def color_ncc2(w, decomp: Ncc2Decomposition) -> int:
    c, xp, yp = ncc2_components(w, decomp)
    return c + decomp.dprime * xp + decomp.dprime * decomp.g1 * yp


def num_colors(basis: GeneratorBasis) -> int:
    return abs(det(basis.u1, basis.u2))


@dataclass
class GridColoring:
    """Finite window of a coloring.

    ``colors[r, c]`` is the color of node ``(origin.x + c, origin.y + r)``.
    ``basis`` is ``None`` for greedy colorings, which carry a ``heuristic``.
    """

    width: int
    height: int
    origin: IntVec2
    params: RadioParams | None
    basis: GeneratorBasis | None
    method: Method
    colors: np.ndarray
    heuristic: object = None

    @property
    def num_colors(self) -> int:
        if self.basis is not None:
            return self.basis.d
        return int(self.colors.max()) + 1 if self.colors.size else 0

    def distinct_colors(self) -> int:
        return int(np.unique(self.colors).size)

    def color_at(self, w) -> int:
        return int(self.colors[w[1] - self.origin.y, w[0] - self.origin.x])

    def nodes(self):
        for r in range(self.height):
            for c in range(self.width):
                yield IntVec2(self.origin.x + c, self.origin.y + r)


def _window_coords(origin, width, height):
    ys, xs = np.mgrid[origin[1]:origin[1] + height, origin[0]:origin[0] + width]
    return xs.astype(np.int64), ys.astype(np.int64)


def color_window(origin, width: int, height: int, basis: GeneratorBasis,
                 method: Method = Method.NCC2, params: RadioParams | None = None) -> GridColoring:
    if width < 1 or height < 1:
        raise ValueError("window must be at least 1x1")
    origin = IntVec2(*origin)
    method = Method(method)
    xs, ys = _window_coords(origin, width, height)
    if method is Method.NCC1:
        palette = build_palette(basis)
        u1, u2, d = basis.u1, basis.u2, basis.d
        c1 = (xs * u2.y - ys * u2.x) % d
        c2 = (-xs * u1.y + ys * u1.x) % d
        keys = np.array([p.c1 * d + p.c2 for p in palette.table], dtype=np.int64)
        colors = np.searchsorted(keys, c1 * d + c2)
        if not np.array_equal(keys[colors], c1 * d + c2):
            raise RuntimeError("color pair missing from palette")
    elif method is Method.NCC2:
        dec = decompose_ncc2(basis)
        a = xs * dec.v2.y - ys * dec.v2.x
        b = dec.v1.x * ys - dec.v1.y * xs
        colors = a % dec.dprime + dec.dprime * ((a // dec.dprime) % dec.g1) \
            + dec.dprime * dec.g1 * ((b // dec.dprime) % dec.g2)
    else:
        raise ValueError(f"{method.value} is not a lattice coloring method")
    return GridColoring(width, height, origin, params, basis, method, colors.astype(np.int64))
