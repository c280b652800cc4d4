"""Optimal generator search.

Candidate pairs come from a window derived from the color-count bounds.
Pairs outside the window cannot be optimal. The search keeps the reduced
pairs, checks validity in order of increasing determinant, and returns
the first valid one.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .bounds import HEX_DENSITY, near_hexagonal_basis, near_square_basis, small_range_bound, upper_bound
from .geometry import GeneratorBasis, IntVec2, gcd_nonneg, is_reduced
from .hops import SQRT2, RadioParams, build_hop_field
from .validity import VCMethod, check_vc1, mu_bound, vc2_batch

THREADS_ENV = "GRID_CHROMA_THREADS"
# int64 products of coordinates must stay far from overflow
_COORD_LIMIT = 1 << 24
_VC2_BATCH = 4096


class SearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchWindow:
    """Squared-length and coordinate bounds on candidate generators.

    All bounds are already widened by one length unit. For ``R <= sqrt 2``
    the bound on ``|u2|`` depends on ``|u1|``; see :meth:`l2_max_sq_for`.
    """

    params: RadioParams
    small_range: bool
    color_bound: float
    l1_min_sq: float
    l1_max_sq: float
    l2_min_sq: float
    l2_max_sq: float
    x1_max: int
    y1_max: int
    x2_max: int
    y2_max: int

    def l2_max_sq_for(self, n1: int) -> float:
        if not self.small_range:
            return self.l2_max_sq
        l2 = 2 * self.color_bound / (math.sqrt(3.0) * math.sqrt(n1)) + 1
        return min(l2 * l2, self.l2_max_sq)


def build_window(params: RadioParams) -> SearchWindow:
    h = params.hops
    if params.above_sqrt2:
        s = upper_bound(params)
        l1_min = h * (float(params.range) - SQRT2)
        l1_max = math.sqrt(s / HEX_DENSITY)
        l2_min = l1_min
        l2_max = s / (HEX_DENSITY * l1_min)
        small = False
    else:
        s = small_range_bound(params)
        l1_min = 0.0
        # hR + 1 alone is not implied by the determinant bound; keep the larger
        l1_max = max(float(params.reach) + 1, math.sqrt(s / HEX_DENSITY))
        l2_min = 0.0
        l2_max = s / HEX_DENSITY
        small = True
    lo1 = max(0.0, l1_min - 1) ** 2
    lo2 = max(0.0, l2_min - 1) ** 2
    hi1 = (l1_max + 1) ** 2
    hi2 = (l2_max + 1) ** 2
    c1 = math.ceil(l1_max + 1)
    c2 = math.ceil(l2_max + 1)
    if c2 > _COORD_LIMIT:
        raise OverflowError(f"search window too large ({c2})")
    return SearchWindow(params, small, s, lo1, hi1, lo2, hi2, c1, c1, c2, c2)


def _half_plane_points(xmax: int, ymax: int, lo: float, hi: float) -> np.ndarray:
    """Points with ``y >= 0`` and squared length in ``[lo, hi]``, sorted by (length, y, x)."""
    ys, xs = np.mgrid[0:ymax + 1, -xmax:xmax + 1]
    xs = xs.ravel().astype(np.int64)
    ys = ys.ravel().astype(np.int64)
    n = xs * xs + ys * ys
    keep = (n > 0) & (n >= lo) & (n <= hi)
    xs, ys, n = xs[keep], ys[keep], n[keep]
    order = np.lexsort((xs, ys, n))
    return np.stack([xs[order], ys[order]], axis=1)


def initial_set_size(window: SearchWindow) -> int:
    """Number of pairs in the two coordinate boxes of the window, zero vectors excluded."""
    n1 = (2 * window.x1_max + 1) * (window.y1_max + 1) - 1
    n2 = (2 * window.x2_max + 1) * (window.y2_max + 1) - 1
    return n1 * n2


def _window_points(window: SearchWindow):
    p1 = _half_plane_points(window.x1_max, window.y1_max, window.l1_min_sq, window.l1_max_sq)
    p2 = _half_plane_points(window.x2_max, window.y2_max, window.l2_min_sq, window.l2_max_sq)
    return p1, p2


def _pair_slices(window: SearchWindow, p1: np.ndarray, p2: np.ndarray):
    """For each first vector, the slice of second vectors to pair it with."""
    n2 = p2[:, 0] * p2[:, 0] + p2[:, 1] * p2[:, 1]
    for u in p1:
        n1 = int(u[0] * u[0] + u[1] * u[1])
        lo = int(np.searchsorted(n2, n1, side="left"))
        hi = int(np.searchsorted(n2, window.l2_max_sq_for(n1), side="right"))
        yield u, n1, lo, max(lo, hi)


def enumerate_candidates(window: SearchWindow) -> Iterator[GeneratorBasis]:
    """Every independent pair of window vectors with ``|u1| <= |u2|``."""
    p1, p2 = _window_points(window)
    for u, _, lo, hi in _pair_slices(window, p1, p2):
        for v in p2[lo:hi]:
            if u[0] * v[1] - u[1] * v[0] != 0:
                yield GeneratorBasis(IntVec2(int(u[0]), int(u[1])), IntVec2(int(v[0]), int(v[1])))


@dataclass(frozen=True)
class SearchResult:
    basis: GeneratorBasis
    num_colors: int
    candidates_examined: int
    validity_method_used: VCMethod
    validity_checks: int = 0
    pairs_scanned: int = 0


def _scan(window: SearchWindow, p1, p2, u1_rows, det_cap: int):
    """Reduced, independent pairs with ``|det| <= det_cap`` for the given first vectors."""
    scanned = 0
    out = []
    for u, n1, lo, hi in _pair_slices(window, u1_rows, p2):
        scanned += hi - lo
        if hi == lo:
            continue
        v = p2[lo:hi]
        dots = u[0] * v[:, 0] + u[1] * v[:, 1]
        dets = np.abs(u[0] * v[:, 1] - u[1] * v[:, 0])
        keep = (2 * np.abs(dots) <= n1) & (dets > 0) & (dets <= det_cap)
        if keep.any():
            vv = v[keep]
            out.append(np.column_stack([
                dets[keep], np.full(len(vv), n1), vv[:, 0] ** 2 + vv[:, 1] ** 2,
                np.full(len(vv), u[0]), np.full(len(vv), u[1]), vv[:, 0], vv[:, 1],
            ]))
    rows = np.concatenate(out) if out else np.empty((0, 7), dtype=np.int64)
    return scanned, rows


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def find_optimal(params: RadioParams, workers: int | None = None) -> SearchResult:
    """Reduced valid basis of minimal determinant.

    Ties are broken by ``(|u1|^2, |u2|^2, x1, y1, x2, y2)`` of the half-plane
    representatives, so the answer does not depend on ``workers``.

    ``candidates_examined`` counts the pairs of the coordinate boxes; those
    failing the length bounds are discarded in bulk. ``pairs_scanned`` counts
    the pairs that reach the reduction test.
    """
    workers = workers or default_workers()
    window = build_window(params)
    field = build_hop_field(params)
    # both constructions are valid, so the optimum is at most the smaller one
    det_cap = min(near_square_basis(params).d, near_hexagonal_basis(params).d)
    p1, p2 = _window_points(window)

    chunks = [c for c in np.array_split(p1, max(1, workers)) if len(c)]
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _scan(window, p1, p2, c, det_cap), chunks))
    else:
        parts = [_scan(window, p1, p2, c, det_cap) for c in chunks]
    scanned = sum(p[0] for p in parts)
    rows = np.concatenate([p[1] for p in parts]) if parts else np.empty((0, 7), dtype=np.int64)
    rows = rows[np.lexsort(tuple(rows[:, k] for k in range(6, -1, -1)))]

    use_vc2 = params.above_sqrt2
    checks = 0
    found = None
    if use_vc2:
        m = mu_bound(params)
        for start in range(0, len(rows), _VC2_BATCH):
            batch = rows[start:start + _VC2_BATCH]
            ok = vc2_batch(batch[:, 3:5], batch[:, 5:7], field, m)
            hits = np.nonzero(ok)[0]
            if len(hits):
                checks += int(hits[0]) + 1
                found = batch[hits[0]]
                break
            checks += len(batch)
    else:
        for row in rows:
            checks += 1
            if check_vc1(GeneratorBasis.from_coords(*map(int, row[3:7])), params, field).valid:
                found = row
                break
    if found is None:
        raise SearchError("no valid basis in window")

    basis = GeneratorBasis.from_coords(*map(int, found[3:7]))
    if not (is_reduced(basis) and check_vc1(basis, params, field).valid):
        raise SearchError(f"selected basis {basis.as_list()} failed re-verification")
    method = VCMethod.VC2 if use_vc2 else VCMethod.VC1
    return SearchResult(basis, basis.d, initial_set_size(window), method, checks, scanned)


def lattice_key(u1, u2) -> tuple[int, int, int]:
    """Hermite normal form ``(p, q, r)`` of the lattice: basis ``(p, 0), (q, r)``
    with ``p, r > 0`` and ``0 <= q < p``."""
    x1, y1, x2, y2 = int(u1[0]), int(u1[1]), int(u2[0]), int(u2[1])
    d = abs(x1 * y2 - x2 * y1)
    r = gcd_nonneg(y1, y2)
    # extended Euclid on (y1, y2): s*y1 + t*y2 = r
    old_r, rr = y1, y2
    old_s, s = 1, 0
    old_t, t = 0, 1
    while rr:
        qq = old_r // rr
        old_r, rr = rr, old_r - qq * rr
        old_s, s = s, old_s - qq * s
        old_t, t = t, old_t - qq * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    p = d // r
    q = (old_s * x1 + old_t * x2) % p
    return p, q, r


def brute_force_optimal(params: RadioParams, box_halfwidth: int | None = None) -> SearchResult:
    """Exhaustive reference search with no window and no reduction filter.

    Every pair of nonzero vectors in the box is a candidate; pairs are taken
    in order of increasing ``|det|`` and checked by VC1 only, one check per
    distinct lattice. The returned basis is the raw pair, not necessarily reduced.
    """
    need = math.ceil(params.reach) + 2
    if box_halfwidth is None:
        box_halfwidth = need
    if box_halfwidth < need:
        raise ValueError(f"box half-width must be at least {need}")
    field = build_hop_field(params)
    b = box_halfwidth
    ys, xs = np.mgrid[-b:b + 1, -b:b + 1]
    pts = np.stack([xs.ravel(), ys.ravel()], axis=1).astype(np.int64)
    pts = pts[(pts[:, 0] != 0) | (pts[:, 1] != 0)]
    i, j = np.triu_indices(len(pts), k=1)
    dets = np.abs(pts[i, 0] * pts[j, 1] - pts[i, 1] * pts[j, 0])
    keep = dets > 0
    i, j, dets = i[keep], j[keep], dets[keep]
    order = np.lexsort((j, i, dets))
    seen = set()
    checks = 0
    for k in order:
        u, v = pts[i[k]], pts[j[k]]
        key = lattice_key(u, v)
        if key in seen:
            continue
        seen.add(key)
        checks += 1
        basis = GeneratorBasis.from_coords(int(u[0]), int(u[1]), int(v[0]), int(v[1]))
        if check_vc1(basis, params, field).valid:
            return SearchResult(basis, basis.d, len(dets), VCMethod.VC1, checks, len(dets))
    raise SearchError("no valid basis in box")
